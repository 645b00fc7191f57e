// Verification suites: every identity and equidistribution claim checked by
// exhaustive enumeration. A claim that fails records its first witness in
// enumeration order (smallest size first, lexicographic within a size).

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "permstat/equidist.hpp"
#include "permstat/errors.hpp"
#include "permstat/text.hpp"

namespace permstat {

namespace {

std::string tuple_text(const std::vector<StatValue>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string names_text(const std::vector<std::string>& names) {
    std::string s = "(";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ',';
        s += names[i];
    }
    return s + ")";
}

class Claim {
public:
    Claim(std::string id, std::string description, std::size_t lo, std::size_t hi) {
        r_.id = std::move(id);
        r_.description = std::move(description);
        r_.n_lo = lo;
        r_.n_hi = hi;
    }

    void count(std::size_t n) {
        ++r_.cases;
        ++r_.cases_by_n[n];
    }

    void fail(std::string witness) {
        if (r_.passed) {
            r_.passed = false;
            r_.witness = std::move(witness);
        }
    }

    bool failed() const { return !r_.passed; }
    ClaimResult take() { return std::move(r_); }

private:
    ClaimResult r_;
};

// Failure detail, or empty when the case holds.
using PermCheck = std::function<std::string(const Permutation&)>;
using WordCheck = std::function<std::string(const DistinctWord&)>;

ClaimResult pointwise(std::string id, std::string description, std::size_t lo, std::size_t n_max,
                      const PermCheck& check) {
    Claim c(std::move(id), std::move(description), lo, n_max);
    for (std::size_t n = lo; n <= n_max; ++n) {
        for_each_permutation(PermutationSource::all(n), [&](const Permutation& p) {
            c.count(n);
            if (c.failed()) return;
            if (auto why = check(p); !why.empty()) c.fail("p=" + format_word(p) + ": " + why);
        }, n_max);
    }
    return c.take();
}

ClaimResult over_words(std::string id, std::string description, std::size_t alphabet, std::size_t max_len,
                       const WordCheck& check) {
    Claim c(std::move(id), std::move(description), 0, std::min(max_len, alphabet));
    for_each_distinct_word(alphabet, max_len, [&](const DistinctWord& w) {
        c.count(w.size());
        if (c.failed()) return;
        if (auto why = check(w); !why.empty()) c.fail("w=" + format_word(w, WordStyle::Spaced) + ": " + why);
    });
    return c.take();
}

// All tuples in `groups` must share one joint distribution on S_n for every
// n in [lo, n_max]. `groups_for_n` allows the list to depend on n.
ClaimResult equidistributed(std::string id, std::string description, std::size_t lo, std::size_t n_max,
                            const std::function<std::vector<std::vector<std::string>>(std::size_t)>& groups_for_n) {
    Claim c(std::move(id), std::move(description), lo, n_max);
    DistributionOptions opts;
    opts.threads = 0;
    opts.cap = n_max;
    for (std::size_t n = lo; n <= n_max && !c.failed(); ++n) {
        const auto groups = groups_for_n(n);
        const auto src = PermutationSource::all(n);
        const auto base = joint_distribution(src, groups.front(), opts);
        for (std::uint64_t i = 0; i < base.total(); ++i) c.count(n);
        for (std::size_t g = 1; g < groups.size() && !c.failed(); ++g) {
            const auto other = joint_distribution(src, groups[g], opts);
            const auto cmp = distributions_equal(base, other);
            if (!cmp) {
                const auto& d = *cmp.first_divergence;
                c.fail("n=" + std::to_string(n) + ": " + names_text(groups.front()) + " vs " + names_text(groups[g]) +
                       " at " + tuple_text(d.values) + ": " + std::to_string(d.count_a) + " vs " +
                       std::to_string(d.count_b));
            }
        }
    }
    return c.take();
}

std::string mismatch(const std::string& what, StatValue got, StatValue want) {
    if (got == want) return {};
    return what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string tuple_mismatch(const std::string& lhs, const std::vector<StatValue>& got, const std::string& rhs,
                           const std::vector<StatValue>& want) {
    if (got == want) return {};
    return lhs + " = " + tuple_text(got) + " but " + rhs + " = " + tuple_text(want);
}

std::uint64_t catalan(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[n];
}

// Number of ways to write w as a nondecreasing prefix followed by hooks.
std::size_t count_hook_decompositions(std::span<const Letter> w) {
    std::function<std::size_t(std::size_t)> hooks_from = [&](std::size_t start) -> std::size_t {
        if (start == w.size()) return 1;
        std::size_t total = 0;
        for (std::size_t end = start + 2; end <= w.size(); ++end) {
            if (is_hook(unchecked_word({w.begin() + static_cast<std::ptrdiff_t>(start),
                                        w.begin() + static_cast<std::ptrdiff_t>(end)}))) {
                total += hooks_from(end);
            }
        }
        return total;
    };
    std::size_t total = 0;
    for (std::size_t p0 = 0; p0 <= w.size(); ++p0) {
        if (!std::is_sorted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p0))) break;
        total += hooks_from(p0);
    }
    return total;
}

struct WordDomain {
    std::size_t alphabet;
    std::size_t max_len;
};

// Lemma domain: lengths <= 5 over {1..7} with inserted letters up to 8 at
// n_max = 8, shrunk for smaller n_max.
WordDomain lemma_domain(std::size_t n_max) { return {std::min<std::size_t>(7, n_max), std::min<std::size_t>(5, n_max)}; }
WordDomain hook_domain(std::size_t n_max) { return {std::min<std::size_t>(8, n_max), std::min<std::size_t>(6, n_max)}; }

using InsertFn = std::function<DistinctWord(Letter, const DistinctWord&)>;
using StatFn = std::function<StatValue(const DistinctWord&)>;

// The insertion lemmas, parameterized so the same checks run for the pair
// (f; aix, des) and for (g; pix, lec).
void insertion_lemmas(std::vector<ClaimResult>& out, std::size_t n_max, const std::string& prefix,
                      const InsertFn& ins, const std::string& fix_name, const StatFn& fixlike,
                      const std::string& eul_name, const StatFn& eulerian) {
    const auto dom = lemma_domain(n_max);
    const Letter top = static_cast<Letter>(dom.alphabet + 1);

    auto each_k = [&](const DistinctWord& t, const std::function<std::string(Letter)>& body) -> std::string {
        for (Letter k = 1; k <= top; ++k) {
            if (t.contains(k)) continue;
            if (auto why = body(k); !why.empty()) return "k=" + std::to_string(k) + ": " + why;
        }
        return {};
    };

    out.push_back(over_words(prefix + "monotone", eul_name + " of the insertion is at least " + eul_name + " t",
                             dom.alphabet, dom.max_len, [&](const DistinctWord& t) {
                                 return each_k(t, [&](Letter k) -> std::string {
                                     const auto u = ins(k, t);
                                     if (eulerian(u) >= eulerian(t)) return {};
                                     return eul_name + " decreased from " + std::to_string(eulerian(t)) + " to " +
                                            std::to_string(eulerian(u));
                                 });
                             }));

    out.push_back(over_words(
        prefix + "equal-iff-increment",
        eul_name + " unchanged iff " + fix_name + " grows by one (and is positive); " + eul_name + " grows iff " +
            fix_name + " becomes 0",
        dom.alphabet, dom.max_len, [&](const DistinctWord& t) {
            return each_k(t, [&](Letter k) -> std::string {
                const auto u = ins(k, t);
                const StatValue eu = eulerian(u), et = eulerian(t), xu = fixlike(u), xt = fixlike(t);
                const bool same = eu == et;
                const bool bumped = xu == xt + 1 && xu > 0;
                if (same != bumped) return "first equivalence broken";
                if ((eu > et) != (xu == 0)) return "second equivalence broken";
                return {};
            });
        }));

    out.push_back(over_words(prefix + "zero-then-one",
                             fix_name + " t = 0 implies " + fix_name + " = 1 and " + eul_name + " unchanged after insertion",
                             dom.alphabet, dom.max_len, [&](const DistinctWord& t) {
                                 if (fixlike(t) != 0) return std::string{};
                                 return each_k(t, [&](Letter k) -> std::string {
                                     const auto u = ins(k, t);
                                     if (fixlike(u) != 1) return fix_name + " = " + std::to_string(fixlike(u));
                                     return mismatch(eul_name, eulerian(u), eulerian(t));
                                 });
                             }));

    const std::size_t sigma_len = std::min<std::size_t>(4, dom.max_len);
    out.push_back(over_words(prefix + "delete-second",
                             fix_name + " of k inserted into (l inserted into s) = 0 implies " + eul_name +
                                 " there = 1 + " + eul_name + " of k inserted into s",
                             dom.alphabet, sigma_len, [&](const DistinctWord& sigma) {
                                 return each_k(sigma, [&](Letter l) -> std::string {
                                     const auto t = ins(l, sigma);
                                     for (Letter k = 1; k <= top; ++k) {
                                         if (k == l || sigma.contains(k)) continue;
                                         const auto u = ins(k, t);
                                         if (fixlike(u) != 0) continue;
                                         if (auto why = mismatch(eul_name, eulerian(u), 1 + eulerian(ins(k, sigma)));
                                             !why.empty()) {
                                             return "k=" + std::to_string(k) + ": " + why;
                                         }
                                     }
                                     return std::string{};
                                 });
                             }));
}

void suite_classic(std::vector<ClaimResult>& out, std::size_t n_max) {
    out.push_back(equidistributed("eulerian", "des ~ exc ~ lec ~ das", 0, n_max, [](std::size_t) {
        return std::vector<std::vector<std::string>>{{"des"}, {"exc"}, {"lec"}, {"das"}};
    }));
    out.push_back(equidistributed("mahonian", "inv ~ maj ~ aid ~ mix ~ rmaj:r for every 1 <= r <= n", 0, n_max,
                                  [](std::size_t n) {
                                      std::vector<std::vector<std::string>> g{{"inv"}, {"maj"}, {"aid"}, {"mix"}};
                                      for (std::size_t r = 1; r <= n; ++r) g.push_back({"rmaj:" + std::to_string(r)});
                                      return g;
                                  }));
    out.push_back(equidistributed("triple-equidistribution", "(fix,exc,maj) ~ (pix,lec,inv) ~ (aix,des,aid)", 0,
                                  n_max, [](std::size_t) {
                                      return std::vector<std::vector<std::string>>{
                                          {"fix", "exc", "maj"}, {"pix", "lec", "inv"}, {"aix", "des", "aid"}};
                                  }));

    const auto hd = hook_domain(n_max);
    out.push_back(over_words("aix-bounded-by-pix", "aix w <= 1 + pix w", hd.alphabet, hd.max_len,
                             [](const DistinctWord& w) -> std::string {
                                 if (aix(w) <= 1 + pix(w)) return {};
                                 return "aix = " + std::to_string(aix(w)) + ", pix = " + std::to_string(pix(w));
                             }));
    out.push_back(over_words("hook-factorization-unique",
                             "greedy hook factorization is valid and is the only decomposition", hd.alphabet,
                             hd.max_len, [](const DistinctWord& w) -> std::string {
                                 const auto hf = hook_factorization(w);
                                 if (!is_nondecreasing(hf.pi0)) return "pi0 not nondecreasing";
                                 std::vector<Letter> joined(hf.pi0.letters().begin(), hf.pi0.letters().end());
                                 for (const auto& h : hf.hooks) {
                                     if (!is_hook(h)) return "factor " + format_word(h, WordStyle::Spaced) + " is not a hook";
                                     joined.insert(joined.end(), h.letters().begin(), h.letters().end());
                                 }
                                 if (!std::equal(joined.begin(), joined.end(), w.letters().begin(), w.letters().end())) {
                                     return "factors do not concatenate to w";
                                 }
                                 if (const auto c = count_hook_decompositions(w.letters()); c != 1) {
                                     return std::to_string(c) + " decompositions found";
                                 }
                                 return {};
                             }));

    Claim id("mix-identity-zero", "mix(id_n) = 0", 0, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        id.count(n);
        if (const auto v = mix(Permutation::identity(n)); v != 0) {
            id.fail("n=" + std::to_string(n) + ": mix = " + std::to_string(v));
        }
    }
    out.push_back(id.take());
}

void suite_theorem1(std::vector<ClaimResult>& out, std::size_t n_max) {
    out.push_back(pointwise("theorem1", "(ini,aix,des,aid) phi(p) = (ini,pix,lec,inv) p", 1, n_max,
                            [](const Permutation& p) {
                                const auto q = phi(p);
                                return tuple_mismatch("(ini,aix,des,aid) phi(p)", {ini(q), aix(q), des(q), aid(q)},
                                                      "(ini,pix,lec,inv) p", {ini(p), pix(p), lec(p), inv(p)});
                            }));
    out.push_back(pointwise("phi-keeps-first-letter", "ini phi(p) = ini p", 1, n_max, [](const Permutation& p) {
        return mismatch("ini phi(p)", ini(phi(p)), ini(p));
    }));
    out.push_back(pointwise("phi-aid-is-inv", "aid phi(p) = inv p", 1, n_max, [](const Permutation& p) {
        return mismatch("aid phi(p)", aid(phi(p)), inv(p));
    }));
    out.push_back(pointwise("phi-roundtrip", "phi_inverse(phi(p)) = p and phi(phi_inverse(p)) = p", 1, n_max,
                            [](const Permutation& p) -> std::string {
                                if (phi_inverse(phi(p)) != p) return "phi_inverse(phi(p)) = " + format_word(phi_inverse(phi(p)));
                                if (phi(phi_inverse(p)) != p) return "phi(phi_inverse(p)) = " + format_word(phi(phi_inverse(p)));
                                return {};
                            }));
}

void suite_lemmas_f(std::vector<ClaimResult>& out, std::size_t n_max) {
    const auto dom = lemma_domain(n_max);
    const Letter top = static_cast<Letter>(dom.alphabet + 1);
    out.push_back(over_words("f-aid-increment", "aid f(k,t) = aid t + |t_{<k}|", dom.alphabet, dom.max_len,
                             [top](const DistinctWord& t) -> std::string {
                                 for (Letter k = 1; k <= top; ++k) {
                                     if (t.contains(k)) continue;
                                     const auto u = f_insert(k, t).word;
                                     if (auto why = mismatch("aid f(k,t)", aid(u), aid(t) + restrict_below(t, k).size());
                                         !why.empty()) {
                                         return "k=" + std::to_string(k) + ": " + why;
                                     }
                                 }
                                 return {};
                             }));
    insertion_lemmas(
        out, n_max, "f-", [](Letter k, const DistinctWord& t) { return f_insert(k, t).word; }, "aix",
        [](const DistinctWord& w) { return aix(w); }, "des", [](const DistinctWord& w) { return des(w); });
}

void suite_lemmas_g(std::vector<ClaimResult>& out, std::size_t n_max) {
    insertion_lemmas(
        out, n_max, "g-", [](Letter k, const DistinctWord& t) { return g_insert(k, t); }, "pix",
        [](const DistinctWord& w) { return pix(w); }, "lec", [](const DistinctWord& w) { return lec(w); });
}

void suite_psi(std::vector<ClaimResult>& out, std::size_t n_max) {
    out.push_back(pointwise("psi-involution", "psi(psi(p)) = p", 1, n_max, [](const Permutation& p) -> std::string {
        const auto back = psi(psi(p));
        return back == p ? std::string{} : "psi(psi(p)) = " + format_word(back);
    }));
    out.push_back(pointwise("psi-das-mix", "(das,mix) psi(p) = (des,inv) p", 1, n_max, [](const Permutation& p) {
        const auto q = psi(p);
        return tuple_mismatch("(das,mix) psi(p)", {das(q), mix(q)}, "(des,inv) p", {des(p), inv(p)});
    }));
    out.push_back(pointwise("psi-mix-inv", "mix psi(p) = inv p and inv psi(p) = mix p", 1, n_max,
                            [](const Permutation& p) {
                                const auto q = psi(p);
                                return tuple_mismatch("(mix,inv) psi(p)", {mix(q), inv(q)}, "(inv,mix) p",
                                                      {inv(p), mix(p)});
                            }));
    out.push_back(pointwise("psi-keeps-lr-maxima", "psi preserves left-to-right maxima positions and values", 1,
                            n_max, [](const Permutation& p) -> std::string {
                                return left_to_right_maxima(psi(p)) == left_to_right_maxima(p)
                                           ? std::string{}
                                           : "left-to-right maxima moved";
                            }));
}

void suite_rawlings(std::vector<ClaimResult>& out, std::size_t n_max) {
    out.push_back(pointwise("rmaj-1-is-maj", "rmaj:1 = maj", 1, n_max, [](const Permutation& p) {
        return mismatch("rmaj:1", rawlings(p, 1), maj(p));
    }));
    out.push_back(pointwise("rmaj-n-is-inv", "rmaj:n = inv", 1, n_max, [](const Permutation& p) {
        return mismatch("rmaj:n", rawlings(p, static_cast<unsigned>(p.size())), inv(p));
    }));
    out.push_back(pointwise("inv2-is-ides", "|Inv_2(p)| = ides p", 1, n_max, [](const Permutation& p) {
        return mismatch("|Inv_2|", inv_set_r(p, 2).size(), ides(p));
    }));
    out.push_back(equidistributed("ides-2maj-vs-exc-maj", "(ides,rmaj:2) ~ (exc,maj)", 0, n_max, [](std::size_t) {
        return std::vector<std::vector<std::string>>{{"ides", "rmaj:2"}, {"exc", "maj"}};
    }));
}

void suite_kratt(std::vector<ClaimResult>& out, std::size_t n_max) {
    Claim sizes("avoider-counts", "321- and 312-avoiders are both counted by Catalan(n)", 0, n_max);
    Claim image("psi-321-to-312", "psi maps the 321-avoiders onto the 312-avoiders", 0, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::set<Permutation> images;
        std::set<Permutation> target;
        std::uint64_t c321 = 0;
        for_each_permutation(PermutationSource::all(n), [&](const Permutation& p) {
            image.count(n);
            if (avoids(p, Pattern::P321)) {
                ++c321;
                images.insert(psi(p));
            }
            if (avoids(p, Pattern::P312)) target.insert(p);
        }, n_max);
        sizes.count(n);
        if (c321 != catalan(n) || target.size() != catalan(n)) {
            sizes.fail("n=" + std::to_string(n) + ": " + std::to_string(c321) + " and " +
                       std::to_string(target.size()) + " avoiders, Catalan = " + std::to_string(catalan(n)));
        }
        if (images != target) {
            std::vector<Permutation> diff;
            std::set_symmetric_difference(images.begin(), images.end(), target.begin(), target.end(),
                                          std::back_inserter(diff));
            image.fail("n=" + std::to_string(n) + ": image and 312-class differ at " + format_word(diff.front()));
        }
    }
    out.push_back(sizes.take());
    out.push_back(image.take());
}

using SuiteFn = void (*)(std::vector<ClaimResult>&, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"classic", suite_classic},   {"theorem1", suite_theorem1}, {"lemmas-f", suite_lemmas_f},
        {"lemmas-g", suite_lemmas_g}, {"psi", suite_psi},           {"rawlings", suite_rawlings},
        {"kratt", suite_kratt},
    };
    return table;
}

}  // namespace

bool Report::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

const ClaimResult* Report::find(const std::string& id) const {
    for (const auto& c : claims)
        if (c.id == id) return &c;
    return nullptr;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suites()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return ids;
}

Report verify_suite(std::size_t n_max, const std::string& suite, std::size_t cap) {
    PermutationSource::all(n_max).check_cap(cap);
    Report report;
    report.suite = suite;
    report.n_max = n_max;
    bool known = false;
    for (const auto& [name, fn] : suites()) {
        if (suite == "all" || suite == name) {
            fn(report.claims, n_max);
            known = true;
        }
    }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return report;
}

std::string report_to_json(const Report& report, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = report.suite;
    j["n_max"] = report.n_max;
    j["status"] = report.passed() ? "pass" : "fail";
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json cj;
        cj["claim_id"] = c.id;
        cj["description"] = c.description;
        cj["status"] = c.passed ? "pass" : "fail";
        cj["n_range"] = {c.n_lo, c.n_hi};
        cj["cases"] = c.cases;
        nlohmann::ordered_json by_n = nlohmann::ordered_json::object();
        for (const auto& [n, k] : c.cases_by_n) by_n[std::to_string(n)] = k;
        cj["cases_by_n"] = by_n;
        if (c.witness) cj["witness"] = *c.witness;
        j["claims"].push_back(std::move(cj));
    }
    return j.dump(indent);
}

}  // namespace permstat

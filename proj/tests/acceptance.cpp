// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every check is exact; the runtime bounds are part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "cli.hpp"
#include "permstat/bijections.hpp"
#include "permstat/equidist.hpp"
#include "permstat/stats.hpp"
#include "permstat/text.hpp"

using namespace permstat;

namespace {

constexpr std::size_t kMaxN = 8;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && secs >= time_limit_s) {
        o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(time_limit_s) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

void each_perm(std::size_t lo, std::size_t hi, const std::function<void(const Permutation&)>& fn) {
    for (std::size_t n = lo; n <= hi; ++n) for_each_permutation(PermutationSource::all(n), fn);
}

void each_word(std::size_t max_len, const std::function<void(const DistinctWord&)>& fn) {
    for_each_distinct_word(7, max_len, fn);
}

std::string w(const DistinctWord& x) { return format_word(x, WordStyle::Spaced); }

std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;  // C(n) = C(n-1) * 2(2n-1)/(n+1)
    for (std::size_t m = 1; m <= n; ++m) c = c * 2 * (2 * m - 1) / (m + 1);
    return c;
}

// Lemma checks over (k, t); `ins` is f or g, (fixlike, eul) are (aix, des)
// or (pix, lec).
template <typename Ins, typename Fixlike, typename Eul>
void insertion_lemmas(Outcome& o, const std::string& tag, Ins ins, Fixlike fixlike, Eul eul) {
    each_word(5, [&](const DistinctWord& t) {
        for (Letter k = 1; k <= 8; ++k) {
            if (t.contains(k)) continue;
            const DistinctWord u = ins(k, t);
            const auto at = [&] { return tag + " k=" + std::to_string(k) + " t=" + w(t); };
            if (eul(u) < eul(t)) o.fail(at() + ": Eulerian statistic decreased");
            const bool same = eul(u) == eul(t);
            if (same != (fixlike(u) == fixlike(t) + 1 && fixlike(u) > 0)) o.fail(at() + ": equal-iff-increment");
            if ((eul(u) > eul(t)) != (fixlike(u) == 0)) o.fail(at() + ": grows-iff-zero");
            if (fixlike(t) == 0 && !(fixlike(u) == 1 && eul(u) == eul(t))) o.fail(at() + ": zero-then-one");
        }
    });
    each_word(4, [&](const DistinctWord& sigma) {
        for (Letter l = 1; l <= 8; ++l) {
            if (sigma.contains(l)) continue;
            const DistinctWord t = ins(l, sigma);
            for (Letter k = 1; k <= 8; ++k) {
                if (k == l || sigma.contains(k)) continue;
                const DistinctWord u = ins(k, t);
                if (fixlike(u) == 0 && eul(u) != 1 + eul(ins(k, sigma))) {
                    o.fail(tag + " delete-second l=" + std::to_string(l) + " k=" + std::to_string(k) + " s=" + w(sigma));
                }
            }
        }
    });
}

}  // namespace

int main() {
    std::printf("permstat acceptance suite, exhaustive up to n = %zu\n", kMaxN);

    criterion(1, "(ini,aix,des,aid) phi(p) = (ini,pix,lec,inv) p for all p in S_n, 1 <= n <= 8", 10.0, [] {
        Outcome o;
        each_perm(1, kMaxN, [&](const Permutation& p) {
            const auto q = phi(p);
            if (ini(q) != ini(p) || aix(q) != pix(p) || des(q) != lec(p) || aid(q) != inv(p)) {
                o.fail("p = " + w(p));
            }
        });
        return o;
    });

    criterion(2, "psi(psi(p)) = p, (das,mix) psi(p) = (des,inv) p, mix psi(p) = inv p, n <= 8", 10.0, [] {
        Outcome o;
        each_perm(0, kMaxN, [&](const Permutation& p) {
            const auto q = psi(p);
            if (psi(q) != p) o.fail("not an involution at p = " + w(p));
            if (das(q) != des(p) || mix(q) != inv(p)) o.fail("(das,mix) mismatch at p = " + w(p));
        });
        return o;
    });

    criterion(3, "(fix,exc,maj) ~ (pix,lec,inv) ~ (aix,des,aid) on S_n, n <= 8", 0, [] {
        Outcome o;
        DistributionOptions opts;
        opts.threads = 0;
        for (std::size_t n = 0; n <= kMaxN; ++n) {
            const auto src = PermutationSource::all(n);
            const auto a = joint_distribution(src, {"fix", "exc", "maj"}, opts);
            const auto b = joint_distribution(src, {"pix", "lec", "inv"}, opts);
            const auto c = joint_distribution(src, {"aix", "des", "aid"}, opts);
            if (!distributions_equal(a, b) || !distributions_equal(b, c)) o.fail("n = " + std::to_string(n));
        }
        return o;
    });

    criterion(4, "insertion lemmas and their g-analogs over distinct words (length <= 5, letters <= 7, k <= 8)", 60.0,
              [] {
                  Outcome o;
                  each_word(5, [&](const DistinctWord& t) {
                      for (Letter k = 1; k <= 8; ++k) {
                          if (t.contains(k)) continue;
                          if (aid(f_insert(k, t).word) != aid(t) + restrict_below(t, k).size()) {
                              o.fail("aid increment at k=" + std::to_string(k) + " t=" + w(t));
                          }
                      }
                  });
                  insertion_lemmas(
                      o, "f", [](Letter k, const DistinctWord& t) { return f_insert(k, t).word; },
                      [](const DistinctWord& x) { return aix(x); }, [](const DistinctWord& x) { return des(x); });
                  insertion_lemmas(
                      o, "g", [](Letter k, const DistinctWord& t) { return g_insert(k, t); },
                      [](const DistinctWord& x) { return pix(x); }, [](const DistinctWord& x) { return lec(x); });
                  return o;
              });

    criterion(5, "aix w <= 1 + pix w over distinct words (length <= 6, letters <= 8)", 0, [] {
        Outcome o;
        for_each_distinct_word(8, 6, [&](const DistinctWord& x) {
            if (aix(x) > 1 + pix(x)) o.fail("w = " + w(x));
        });
        return o;
    });

    criterion(6, "rmaj:1 = maj, rmaj:n = inv, |Inv_2| = ides, (ides,rmaj:2) ~ (exc,maj), n <= 8", 0, [] {
        Outcome o;
        each_perm(1, kMaxN, [&](const Permutation& p) {
            if (rawlings(p, 1) != maj(p)) o.fail("rmaj:1 at p = " + w(p));
            if (rawlings(p, static_cast<unsigned>(p.size())) != inv(p)) o.fail("rmaj:n at p = " + w(p));
            if (inv_set_r(p, 2).size() != ides(p)) o.fail("Inv_2 at p = " + w(p));
        });
        for (std::size_t n = 0; n <= kMaxN; ++n) {
            const auto src = PermutationSource::all(n);
            if (!distributions_equal(joint_distribution(src, {"ides", "rmaj:2"}), joint_distribution(src, {"exc", "maj"}))) {
                o.fail("(ides,rmaj:2) vs (exc,maj) at n = " + std::to_string(n));
            }
        }
        return o;
    });

    criterion(7, "hook factorization valid and unique for all words of length <= 6", 0, [] {
        Outcome o;
        const auto r = verify_suite(kMaxN, "classic");
        const auto* c = r.find("hook-factorization-unique");
        if (c == nullptr) {
            o.fail("claim missing");
        } else if (!c->passed) {
            o.fail(c->witness.value_or("failed"));
        } else if (c->n_hi != 6) {
            o.fail("word lengths only up to " + std::to_string(c->n_hi));
        }
        return o;
    });

    criterion(8, "psi maps the 321-avoiders onto the 312-avoiders, both of size Catalan(n), n <= 8", 0, [] {
        Outcome o;
        for (std::size_t n = 0; n <= kMaxN; ++n) {
            std::set<Permutation> image;
            const auto from = enumerate(PermutationSource::avoiding(n, Pattern::P321));
            const auto to = enumerate(PermutationSource::avoiding(n, Pattern::P312));
            for (const auto& p : from) image.insert(psi(p));
            if (from.size() != catalan(n) || to.size() != catalan(n)) o.fail("class size at n = " + std::to_string(n));
            if (image != std::set<Permutation>(to.begin(), to.end())) o.fail("image differs at n = " + std::to_string(n));
        }
        return o;
    });

    criterion(9, "phi_inverse o phi = id and phi o phi_inverse = id on S_n, n <= 8; CSV table round trip", 0, [] {
        Outcome o;
        each_perm(0, kMaxN, [&](const Permutation& p) {
            if (phi_inverse(phi(p)) != p) o.fail("phi_inverse(phi(p)) at p = " + w(p));
            if (phi(phi_inverse(p)) != p) o.fail("phi(phi_inverse(p)) at p = " + w(p));
        });
        for (std::size_t n = 0; n <= kMaxN; ++n) {
            const auto d = joint_distribution(PermutationSource::all(n), {"fix", "exc", "maj", "rmaj:2"});
            if (cli::table_from_csv(cli::table_to_csv(d)) != d) o.fail("csv round trip at n = " + std::to_string(n));
        }
        return o;
    });

    criterion(10, "mix(id_n) = 0 for n <= 10", 0, [] {
        Outcome o;
        for (std::size_t n = 0; n <= 10; ++n)
            if (mix(Permutation::identity(n)) != 0) o.fail("n = " + std::to_string(n));
        return o;
    });

    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}

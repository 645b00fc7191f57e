#include "permstat/stats.hpp"

#include <algorithm>
#include <charconv>

#include "permstat/errors.hpp"

namespace permstat {

bool is_nondecreasing(const DistinctWord& w) {
    const auto l = w.letters();
    return std::is_sorted(l.begin(), l.end());
}

bool is_hook(const DistinctWord& w) {
    const auto l = w.letters();
    return l.size() >= 2 && l[0] > l[1] && std::is_sorted(l.begin() + 1, l.end());
}

std::set<Position> des_set(const DistinctWord& w) {
    std::set<Position> out;
    const auto l = w.letters();
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
        if (l[i] > l[i + 1]) out.insert(i + 1);
    return out;
}

StatValue des(const DistinctWord& w) {
    StatValue n = 0;
    const auto l = w.letters();
    for (std::size_t i = 0; i + 1 < l.size(); ++i) n += l[i] > l[i + 1];
    return n;
}

StatValue maj(const DistinctWord& w) {
    StatValue s = 0;
    const auto l = w.letters();
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
        if (l[i] > l[i + 1]) s += i + 1;
    return s;
}

std::set<InversionPair> inv_set(const DistinctWord& w) {
    std::set<InversionPair> out;
    const auto l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (l[i] > l[j]) out.insert({i + 1, j + 1});
    return out;
}

StatValue inv(const DistinctWord& w) {
    StatValue n = 0;
    const auto l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) n += l[i] > l[j];
    return n;
}

std::set<Position> exc_set(const Permutation& p) {
    std::set<Position> out;
    for (Position i = 1; i <= p.size(); ++i)
        if (p(i) > i) out.insert(i);
    return out;
}

StatValue exc(const Permutation& p) {
    StatValue n = 0;
    for (Position i = 1; i <= p.size(); ++i) n += p(i) > i;
    return n;
}

StatValue fix(const Permutation& p) {
    StatValue n = 0;
    for (Position i = 1; i <= p.size(); ++i) n += p(i) == i;
    return n;
}

StatValue imaj(const Permutation& p) { return maj(inverse(p)); }
StatValue ides(const Permutation& p) { return des(inverse(p)); }

StatValue ini(const DistinctWord& w) {
    if (w.empty()) throw EmptyWord("ini of the empty word");
    return w(1);
}

namespace {

// Calls visit(i, j) (0-based) for every admissible inversion. For a fixed
// bottom j, scanning i leftwards keeps the minimum of the letters strictly
// between i and j, which settles the second clause in O(1).
template <typename Visit>
void for_each_admissible(std::span<const Letter> l, Visit visit) {
    const std::size_t n = l.size();
    for (std::size_t j = 1; j < n; ++j) {
        const bool ascent_after = j + 1 < n && l[j] < l[j + 1];
        Letter between_min = 0;  // 0 = nothing between yet
        for (std::size_t i = j; i-- > 0;) {
            if (l[i] > l[j] && (ascent_after || (between_min != 0 && between_min < l[j]))) visit(i, j);
            if (between_min == 0 || l[i] < between_min) between_min = l[i];
        }
    }
}

}  // namespace

std::set<InversionPair> admissible_inversions(const DistinctWord& w) {
    std::set<InversionPair> out;
    for_each_admissible(w.letters(), [&](std::size_t i, std::size_t j) { out.insert({i + 1, j + 1}); });
    return out;
}

StatValue ai(const DistinctWord& w) {
    StatValue n = 0;
    for_each_admissible(w.letters(), [&](std::size_t, std::size_t) { ++n; });
    return n;
}

StatValue aid(const DistinctWord& w) { return ai(w) + des(w); }

HookFactorization hook_factorization(const DistinctWord& w) {
    const auto l = w.letters();
    std::size_t end = l.size();  // current word is l[0, end)
    std::vector<DistinctWord> hooks;
    for (;;) {
        std::size_t top = end;  // 0-based index of rightmost descent top in l[0, end)
        for (std::size_t i = end; i-- > 1;) {
            if (l[i - 1] > l[i]) {
                top = i - 1;
                break;
            }
        }
        if (top == end) break;
        hooks.push_back(unchecked_word({l.begin() + static_cast<std::ptrdiff_t>(top),
                                        l.begin() + static_cast<std::ptrdiff_t>(end)}));
        end = top;
    }
    std::reverse(hooks.begin(), hooks.end());
    return {unchecked_word({l.begin(), l.begin() + static_cast<std::ptrdiff_t>(end)}), std::move(hooks)};
}

StatValue lec(const DistinctWord& w) {
    StatValue s = 0;
    for (const auto& h : hook_factorization(w).hooks) s += inv(h);
    return s;
}

StatValue pix(const DistinctWord& w) { return hook_factorization(w).pi0.size(); }

StatValue aix(const DistinctWord& w) {
    auto rest = w.letters();
    StatValue acc = 0;
    while (!rest.empty()) {
        const auto m = std::min_element(rest.begin(), rest.end());
        const auto alpha = rest.first(static_cast<std::size_t>(m - rest.begin()));
        const auto beta = rest.subspan(alpha.size() + 1);
        if (alpha.empty()) {
            ++acc;
            rest = beta;
        } else if (beta.empty()) {
            break;
        } else {
            rest = alpha;
        }
    }
    return acc;
}

StatValue mix(const Permutation& p) {
    const auto l = p.letters();
    const std::size_t n = l.size();
    StatValue count = 0;
    Letter prefix_max = 0;  // max of l[0, i)
    for (std::size_t i = 0; i < n; ++i) {
        const bool lr_max = l[i] > prefix_max;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (l[i] > l[j]) {
                count += lr_max;
            } else {
                count += prefix_max > l[j];
            }
        }
        prefix_max = std::max(prefix_max, l[i]);
    }
    return count;
}

StatValue das(const Permutation& p) {
    const auto l = p.letters();
    StatValue count = 0;
    Letter prefix_max = 0;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i] > l[i + 1]) {
            count += l[i] > prefix_max;
        } else {
            count += prefix_max > l[i + 1];
        }
        prefix_max = std::max(prefix_max, l[i]);
    }
    return count;
}

namespace {
void require_r(unsigned r) {
    if (r == 0) throw InvalidR("r must be at least 1");
}
}  // namespace

std::set<Position> des_set_r(const Permutation& p, unsigned r) {
    require_r(r);
    std::set<Position> out;
    for (Position i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1) && p(i) - p(i + 1) >= r) out.insert(i);
    return out;
}

std::set<InversionPair> inv_set_r(const Permutation& p, unsigned r) {
    require_r(r);
    std::set<InversionPair> out;
    for (Position i = 1; i <= p.size(); ++i)
        for (Position j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j) && p(i) - p(j) < r) out.insert({i, j});
    return out;
}

StatValue rawlings(const Permutation& p, unsigned r) {
    require_r(r);
    const auto l = p.letters();
    StatValue s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i + 1 < l.size() && l[i] > l[i + 1] && l[i] - l[i + 1] >= r) s += i + 1;
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (l[i] > l[j] && l[i] - l[j] < r) ++s;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct NamedKind {
    std::string_view name;
    StatKind kind;
    bool permutation_only;
};

constexpr NamedKind kNames[] = {
    {"des", StatKind::Des, false},  {"exc", StatKind::Exc, true},   {"inv", StatKind::Inv, false},
    {"maj", StatKind::Maj, false},  {"fix", StatKind::Fix, true},   {"imaj", StatKind::Imaj, true},
    {"ides", StatKind::Ides, true}, {"ini", StatKind::Ini, false},  {"ai", StatKind::Ai, false},
    {"aid", StatKind::Aid, false},  {"lec", StatKind::Lec, false},  {"pix", StatKind::Pix, false},
    {"aix", StatKind::Aix, false},  {"mix", StatKind::Mix, true},   {"das", StatKind::Das, true},
    {"rmaj", StatKind::Rmaj, true},
};

const NamedKind& lookup(StatKind k) {
    for (const auto& e : kNames)
        if (e.kind == k) return e;
    throw InvariantViolation("statistic kind missing from registry");
}

}  // namespace

std::string Statistic::name() const {
    std::string n(lookup(kind).name);
    if (kind == StatKind::Rmaj) n += ":" + std::to_string(r);
    return n;
}

bool Statistic::requires_permutation() const { return lookup(kind).permutation_only; }

Statistic parse_statistic(std::string_view name) {
    constexpr std::string_view rmaj_prefix = "rmaj:";
    if (name.starts_with(rmaj_prefix)) {
        const auto digits = name.substr(rmaj_prefix.size());
        unsigned r = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw UnknownStatistic("unknown statistic '" + std::string(name) + "'");
        }
        require_r(r);
        return {StatKind::Rmaj, r};
    }
    for (const auto& e : kNames)
        if (e.name == name && e.kind != StatKind::Rmaj) return {e.kind, 0};
    throw UnknownStatistic("unknown statistic '" + std::string(name) + "'");
}

std::vector<Statistic> parse_statistics(const std::vector<std::string>& names) {
    std::vector<Statistic> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(parse_statistic(n));
    return out;
}

const std::vector<Statistic>& registry() {
    static const std::vector<Statistic> all = [] {
        std::vector<Statistic> v;
        for (const auto& e : kNames)
            if (e.kind != StatKind::Rmaj) v.push_back({e.kind, 0});
        return v;
    }();
    return all;
}

namespace {

StatValue evaluate_word_stat(const Statistic& s, const DistinctWord& w) {
    switch (s.kind) {
        case StatKind::Des: return des(w);
        case StatKind::Inv: return inv(w);
        case StatKind::Maj: return maj(w);
        case StatKind::Ini: return ini(w);
        case StatKind::Ai: return ai(w);
        case StatKind::Aid: return aid(w);
        case StatKind::Lec: return lec(w);
        case StatKind::Pix: return pix(w);
        case StatKind::Aix: return aix(w);
        default: break;
    }
    throw WordNotPermutation("statistic '" + s.name() + "' needs a permutation");
}

}  // namespace

StatValue evaluate(const Statistic& s, const Permutation& p) {
    switch (s.kind) {
        case StatKind::Exc: return exc(p);
        case StatKind::Fix: return fix(p);
        case StatKind::Imaj: return imaj(p);
        case StatKind::Ides: return ides(p);
        case StatKind::Mix: return mix(p);
        case StatKind::Das: return das(p);
        case StatKind::Rmaj: return rawlings(p, s.r);
        default: return evaluate_word_stat(s, p.word());
    }
}

StatValue evaluate(const Statistic& s, const DistinctWord& w) { return evaluate_word_stat(s, w); }

std::vector<StatValue> StatVector::values() const {
    std::vector<StatValue> v;
    for (const auto& e : entries_) v.push_back(e.second);
    return v;
}

std::vector<std::string> StatVector::names() const {
    std::vector<std::string> v;
    for (const auto& e : entries_) v.push_back(e.first);
    return v;
}

StatVector stat_vector(const Permutation& p, const std::vector<std::string>& names) {
    std::vector<StatVector::Entry> entries;
    for (const auto& s : parse_statistics(names)) entries.emplace_back(s.name(), evaluate(s, p));
    return StatVector(std::move(entries));
}

StatVector stat_vector(const DistinctWord& w, const std::vector<std::string>& names) {
    const auto stats = parse_statistics(names);
    const auto l = w.letters();
    const bool is_perm = std::all_of(l.begin(), l.end(), [&](Letter x) { return x <= l.size(); });
    if (is_perm) return stat_vector(Permutation::from(w), names);
    std::vector<StatVector::Entry> entries;
    for (const auto& s : stats) entries.emplace_back(s.name(), evaluate(s, w));
    return StatVector(std::move(entries));
}

}  // namespace permstat

#pragma once

/**
 * @file stats.hpp
 * @brief Permutation statistics and the statistic registry.
 *
 * Statistics that only compare letters with letters (or positions with
 * positions) take a DistinctWord and are invariant under order-preserving
 * relabeling. Those that compare a letter with its position, or need the
 * inverse, take a Permutation.
 */

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

using StatValue = std::uint64_t;

struct InversionPair {
    Position i;
    Position j;
    auto operator<=>(const InversionPair&) const = default;
};

struct HookFactorization {
    DistinctWord pi0;                  // nondecreasing, possibly empty
    std::vector<DistinctWord> hooks;  // left to right
};

bool is_nondecreasing(const DistinctWord& w);
// w1 > w2 <= w3 <= ... <= wr with r >= 2.
bool is_hook(const DistinctWord& w);

std::set<Position> des_set(const DistinctWord& w);
StatValue des(const DistinctWord& w);
StatValue maj(const DistinctWord& w);

std::set<InversionPair> inv_set(const DistinctWord& w);
StatValue inv(const DistinctWord& w);

std::set<Position> exc_set(const Permutation& p);
StatValue exc(const Permutation& p);
StatValue fix(const Permutation& p);
StatValue imaj(const Permutation& p);
StatValue ides(const Permutation& p);

// First letter. Throws EmptyWord on the empty word.
StatValue ini(const DistinctWord& w);

// An inversion (i,j) is admissible when w(j) < w(j+1), or some k with
// i < k < j has w(k) < w(j). At j = |w| the first clause is false.
std::set<InversionPair> admissible_inversions(const DistinctWord& w);
StatValue ai(const DistinctWord& w);
StatValue aid(const DistinctWord& w);

// Greedy right-to-left split: the rightmost hook starts at the rightmost
// descent top and runs to the current end; what remains is pi0.
HookFactorization hook_factorization(const DistinctWord& w);
StatValue lec(const DistinctWord& w);
StatValue pix(const DistinctWord& w);

// Recursive split at the minimum letter. A single letter evaluates to 1.
StatValue aix(const DistinctWord& w);

StatValue mix(const Permutation& p);
StatValue das(const Permutation& p);

// Rawlings major index. r >= 1, else InvalidR.
std::set<Position> des_set_r(const Permutation& p, unsigned r);
std::set<InversionPair> inv_set_r(const Permutation& p, unsigned r);
StatValue rawlings(const Permutation& p, unsigned r);

// ---------------------------------------------------------------------------
// Registry

enum class StatKind {
    Des, Exc, Inv, Maj, Fix, Imaj, Ides, Ini, Ai, Aid, Lec, Pix, Aix, Mix, Das, Rmaj,
};

struct Statistic {
    StatKind kind;
    unsigned r = 0;  // only meaningful for Rmaj

    std::string name() const;
    bool requires_permutation() const;
    bool operator==(const Statistic&) const = default;
};

// Accepts the canonical lowercase names and "rmaj:<r>" with r >= 1.
// Throws UnknownStatistic (or InvalidR for rmaj:0).
Statistic parse_statistic(std::string_view name);
std::vector<Statistic> parse_statistics(const std::vector<std::string>& names);

// Canonical order of the non-parametric statistics.
const std::vector<Statistic>& registry();

StatValue evaluate(const Statistic& s, const Permutation& p);
// Throws WordNotPermutation for a permutation-only statistic.
StatValue evaluate(const Statistic& s, const DistinctWord& w);

class StatVector {
public:
    using Entry = std::pair<std::string, StatValue>;

    StatVector() = default;
    explicit StatVector(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::vector<StatValue> values() const;
    std::vector<std::string> names() const;
    std::size_t size() const noexcept { return entries_.size(); }

    bool operator==(const StatVector&) const = default;

private:
    std::vector<Entry> entries_;
};

StatVector stat_vector(const Permutation& p, const std::vector<std::string>& names);
// A general word is promoted to a Permutation when it is one.
StatVector stat_vector(const DistinctWord& w, const std::vector<std::string>& names);

}  // namespace permstat

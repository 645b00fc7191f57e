#pragma once

/**
 * @file equidist.hpp
 * @brief Exhaustive enumeration, joint distributions and the verification
 *        suites built on them.
 *
 * Enumeration of S_n is lexicographic within each first-letter block, and
 * blocks come in increasing order, so a sequential pass visits S_n in
 * lexicographic order. Parallel consumers take whole blocks.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/stats.hpp"
#include "permstat/word.hpp"

namespace permstat {

inline constexpr std::size_t kDefaultSizeCap = 10;
// Largest n the verification suites run at without an explicit opt-in.
inline constexpr std::size_t kDefaultSuiteCap = 8;

// kDefaultSizeCap, or the value of PERMSTAT_NMAX when it is a valid natural.
std::size_t size_cap_from_env();

class PermutationSource {
public:
    enum class Kind { All, Avoiding, Explicit };

    static PermutationSource all(std::size_t n);
    static PermutationSource avoiding(std::size_t n, Pattern pattern);
    // Throws ArityMismatch if the permutations differ in size.
    static PermutationSource explicit_list(std::vector<Permutation> perms);

    Kind kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return n_; }
    Pattern pattern() const noexcept { return pattern_; }
    const std::vector<Permutation>& perms() const noexcept { return perms_; }

    // Throws SizeCapExceeded when n > cap.
    void check_cap(std::size_t cap) const;

private:
    Kind kind_ = Kind::All;
    std::size_t n_ = 0;
    Pattern pattern_ = Pattern::P321;
    std::vector<Permutation> perms_;
};

using PermutationVisitor = std::function<void(const Permutation&)>;

// Visits every permutation of the source exactly once.
void for_each_permutation(const PermutationSource& src, const PermutationVisitor& visit,
                          std::size_t cap = kDefaultSizeCap);
// Only the block whose first letter is `first` (1..n). For an explicit list
// the block is the sublist with that first letter.
void for_each_in_block(const PermutationSource& src, Letter first, const PermutationVisitor& visit);
std::vector<Permutation> enumerate(const PermutationSource& src, std::size_t cap = kDefaultSizeCap);

// Every word of distinct letters from {1..alphabet} with length <= max_len,
// shorter words first, lexicographic within a length.
void for_each_distinct_word(std::size_t alphabet, std::size_t max_len,
                            const std::function<void(const DistinctWord&)>& visit);

using StatTuple = std::vector<StatValue>;

class JointDistribution {
public:
    JointDistribution() = default;
    explicit JointDistribution(std::vector<std::string> stat_names) : names_(std::move(stat_names)) {}

    const std::vector<std::string>& stat_names() const noexcept { return names_; }
    const std::map<StatTuple, std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }
    std::size_t arity() const noexcept { return names_.size(); }

    // Zero counts are ignored. Throws ArityMismatch on a wrong-size tuple.
    void add(const StatTuple& values, std::uint64_t count = 1);
    // Key-wise addition. Throws ArityMismatch on differing arity.
    void merge(const JointDistribution& other);

    bool operator==(const JointDistribution&) const = default;

private:
    std::vector<std::string> names_;
    std::map<StatTuple, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct DistributionOptions {
    std::size_t threads = 1;  // 0 = hardware concurrency
    std::size_t cap = kDefaultSizeCap;
};

JointDistribution joint_distribution(const PermutationSource& src, const std::vector<std::string>& names,
                                     const DistributionOptions& options = {});

struct Divergence {
    StatTuple values;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
};

struct Comparison {
    bool equal = true;
    std::optional<Divergence> first_divergence;  // lexicographically smallest
    explicit operator bool() const noexcept { return equal; }
};

// Compares count maps only; statistic names may differ. Throws
// ArityMismatch when the tuple lengths differ.
Comparison distributions_equal(const JointDistribution& a, const JointDistribution& b);

// ---------------------------------------------------------------------------
// Verification suites

struct ClaimResult {
    std::string id;
    std::string description;
    bool passed = true;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::uint64_t cases = 0;
    std::map<std::size_t, std::uint64_t> cases_by_n;
    std::optional<std::string> witness;
};

struct Report {
    std::string suite;
    std::size_t n_max = 0;
    std::vector<ClaimResult> claims;

    bool passed() const;
    const ClaimResult* find(const std::string& id) const;
};

const std::vector<std::string>& suite_ids();

// Failures are reported as data. Throws SizeCapExceeded when n_max > cap and
// std::invalid_argument for an unknown suite id.
Report verify_suite(std::size_t n_max, const std::string& suite, std::size_t cap = kDefaultSizeCap);

// Serialized report: {"schema": 1, "suite", "n_max", "status", "claims": [...]}.
std::string report_to_json(const Report& report, int indent = 2);

}  // namespace permstat

#pragma once

/**
 * @file word.hpp
 * @brief Words of distinct letters and permutations in one-line notation.
 *
 * Letters are naturals >= 1. Positions are 1-based at the interface; the
 * storage underneath is an ordinary 0-based vector. Both types are immutable
 * values: every operation returns a fresh object.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace permstat {

using Letter = std::uint32_t;
using Position = std::size_t;  // 1-based

class DistinctWord {
public:
    DistinctWord() = default;

    // Throws DuplicateLetter on a repeated value, InvalidLetter on 0.
    static DistinctWord from(std::span<const Letter> letters);
    static DistinctWord from(std::initializer_list<Letter> letters) {
        return from(std::span<const Letter>(letters.begin(), letters.size()));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // 1-based access, unchecked beyond a debug assert.
    Letter at(Position i) const;
    Letter operator()(Position i) const { return at(i); }

    std::span<const Letter> letters() const noexcept { return letters_; }
    bool contains(Letter x) const;
    Letter min_letter() const;  // throws EmptyWord
    Letter max_letter() const;  // throws EmptyWord

    // Concatenation; throws DuplicateLetter if the alphabets overlap.
    DistinctWord operator+(const DistinctWord& rhs) const;

    bool operator==(const DistinctWord&) const = default;
    auto operator<=>(const DistinctWord&) const = default;

private:
    struct Unchecked {};
    DistinctWord(Unchecked, std::vector<Letter> letters) : letters_(std::move(letters)) {}
    friend DistinctWord unchecked_word(std::vector<Letter> letters);

    std::vector<Letter> letters_;
};

// Builds a word without validating distinctness. Internal use only: the
// caller guarantees the invariant.
DistinctWord unchecked_word(std::vector<Letter> letters);

class Permutation {
public:
    Permutation() = default;

    // Throws NotAPermutation unless the letters are exactly 1..n.
    static Permutation from(std::span<const Letter> letters);
    static Permutation from(std::initializer_list<Letter> letters) {
        return from(std::span<const Letter>(letters.begin(), letters.size()));
    }
    static Permutation from(const DistinctWord& w);
    static Permutation identity(std::size_t n);
    static Permutation reversed_identity(std::size_t n);

    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    Letter at(Position i) const { return word_.at(i); }
    Letter operator()(Position i) const { return word_.at(i); }
    std::span<const Letter> letters() const noexcept { return word_.letters(); }

    const DistinctWord& word() const noexcept { return word_; }
    operator const DistinctWord&() const noexcept { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(DistinctWord w) : word_(std::move(w)) {}
    DistinctWord word_;
};

struct LeftToRightMaxima {
    std::vector<Position> positions;
    std::vector<Letter> values;

    bool operator==(const LeftToRightMaxima&) const = default;
};

DistinctWord make_word(std::span<const Letter> letters);
Permutation make_permutation(std::span<const Letter> letters);

Permutation inverse(const Permutation& p);

// The block of k rightmost letters. Throws KOutOfRange when k > |w|.
DistinctWord suffix(const DistinctWord& w, std::size_t k);

// Subsequence of letters < k (resp. > k), order preserved.
DistinctWord restrict_below(const DistinctWord& w, Letter k);
DistinctWord restrict_above(const DistinctWord& w, Letter k);

LeftToRightMaxima left_to_right_maxima(const DistinctWord& w);

// Positions holding letters of S receive those letters in reversed order.
DistinctWord reverse_subword_on(const DistinctWord& w, const std::set<Letter>& s);

// Letters of S are exchanged by the order-reversing map of S onto itself:
// the i-th smallest element of S becomes the i-th largest. Other letters
// stay put. This is the step used by psi.
DistinctWord complement_subword_on(const DistinctWord& w, const std::set<Letter>& s);

}  // namespace permstat

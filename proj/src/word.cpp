#include "permstat/word.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_set>

#include "permstat/errors.hpp"

namespace permstat {

DistinctWord unchecked_word(std::vector<Letter> letters) {
    return DistinctWord(DistinctWord::Unchecked{}, std::move(letters));
}

DistinctWord DistinctWord::from(std::span<const Letter> letters) {
    std::unordered_set<Letter> seen;
    seen.reserve(letters.size());
    for (Letter x : letters) {
        if (x == 0) throw InvalidLetter("letter 0 is not allowed");
        if (!seen.insert(x).second) throw DuplicateLetter(x);
    }
    return DistinctWord(Unchecked{}, std::vector<Letter>(letters.begin(), letters.end()));
}

Letter DistinctWord::at(Position i) const {
    assert(i >= 1 && i <= letters_.size());
    return letters_[i - 1];
}

bool DistinctWord::contains(Letter x) const {
    return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
}

Letter DistinctWord::min_letter() const {
    if (letters_.empty()) throw EmptyWord("minimum of the empty word");
    return *std::min_element(letters_.begin(), letters_.end());
}

Letter DistinctWord::max_letter() const {
    if (letters_.empty()) throw EmptyWord("maximum of the empty word");
    return *std::max_element(letters_.begin(), letters_.end());
}

DistinctWord DistinctWord::operator+(const DistinctWord& rhs) const {
    std::vector<Letter> out(letters_);
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from(out);
}

Permutation Permutation::from(std::span<const Letter> letters) {
    const std::size_t n = letters.size();
    std::vector<bool> seen(n + 1, false);
    for (Letter x : letters) {
        if (x == 0 || x > n || seen[x]) {
            throw NotAPermutation("letters are not a rearrangement of 1.." + std::to_string(n));
        }
        seen[x] = true;
    }
    return Permutation(unchecked_word(std::vector<Letter>(letters.begin(), letters.end())));
}

Permutation Permutation::from(const DistinctWord& w) { return from(w.letters()); }

Permutation Permutation::identity(std::size_t n) {
    std::vector<Letter> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Letter>(i + 1);
    return Permutation(unchecked_word(std::move(v)));
}

Permutation Permutation::reversed_identity(std::size_t n) {
    std::vector<Letter> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Letter>(n - i);
    return Permutation(unchecked_word(std::move(v)));
}

DistinctWord make_word(std::span<const Letter> letters) { return DistinctWord::from(letters); }

Permutation make_permutation(std::span<const Letter> letters) { return Permutation::from(letters); }

Permutation inverse(const Permutation& p) {
    const auto w = p.letters();
    std::vector<Letter> q(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) q[w[i] - 1] = static_cast<Letter>(i + 1);
    return Permutation::from(q);
}

DistinctWord suffix(const DistinctWord& w, std::size_t k) {
    if (k > w.size()) {
        throw KOutOfRange("suffix length " + std::to_string(k) + " exceeds word length " +
                          std::to_string(w.size()));
    }
    const auto l = w.letters();
    return unchecked_word(std::vector<Letter>(l.end() - static_cast<std::ptrdiff_t>(k), l.end()));
}

DistinctWord restrict_below(const DistinctWord& w, Letter k) {
    std::vector<Letter> out;
    for (Letter x : w.letters())
        if (x < k) out.push_back(x);
    return unchecked_word(std::move(out));
}

DistinctWord restrict_above(const DistinctWord& w, Letter k) {
    std::vector<Letter> out;
    for (Letter x : w.letters())
        if (x > k) out.push_back(x);
    return unchecked_word(std::move(out));
}

LeftToRightMaxima left_to_right_maxima(const DistinctWord& w) {
    LeftToRightMaxima out;
    Letter best = 0;
    const auto l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] > best) {
            best = l[i];
            out.positions.push_back(i + 1);
            out.values.push_back(l[i]);
        }
    }
    return out;
}

DistinctWord reverse_subword_on(const DistinctWord& w, const std::set<Letter>& s) {
    const auto l = w.letters();
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (s.contains(l[i])) slots.push_back(i);
    std::vector<Letter> out(l.begin(), l.end());
    for (std::size_t a = 0, b = slots.size(); a < slots.size(); ++a) out[slots[a]] = l[slots[--b]];
    return unchecked_word(std::move(out));
}

DistinctWord complement_subword_on(const DistinctWord& w, const std::set<Letter>& s) {
    // Only the members of S that occur in w take part in the exchange.
    std::vector<Letter> present;
    for (Letter x : s)
        if (w.contains(x)) present.push_back(x);
    std::vector<Letter> out(w.letters().begin(), w.letters().end());
    for (Letter& x : out) {
        auto it = std::lower_bound(present.begin(), present.end(), x);
        if (it != present.end() && *it == x) {
            const auto rank = static_cast<std::size_t>(it - present.begin());
            x = present[present.size() - 1 - rank];
        }
    }
    return unchecked_word(std::move(out));
}

}  // namespace permstat

#pragma once

/**
 * @file bijections.hpp
 * @brief Insertion map f, its fold phi, and the LR-maxima preserving
 *        involution psi.
 *
 * phi sends (ini, pix, lec, inv) to (ini, aix, des, aid). psi fixes the
 * left-to-right maxima of a permutation and sends (des, inv) to (das, mix).
 */

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

// Which branch of the insertion recursion fired.
//   a: t = alpha m beta, k > m, both sides nonempty -> f(k, alpha) m beta
//   b: t = m beta, k > m                             -> f(k, beta) m
//   c: t = alpha m, k > m                            -> k m alpha
//   d: k is the minimum                              -> k t
//   base: t empty                                    -> k
enum class InsertionRule { A, B, C, D, Base };

char rule_tag(InsertionRule r);

struct InsertionStep {
    InsertionRule rule;
    std::size_t prefix_length;  // |t| at the time the rule applied
    bool operator==(const InsertionStep&) const = default;
};

// The steps in order of application. Only the last one is c, d or base.
struct InsertionTrace {
    std::vector<InsertionStep> steps;
    std::string to_string() const;  // e.g. "b(2) c(1)"
};

struct Insertion {
    DistinctWord word;
    InsertionTrace trace;
};

// Throws LetterCollision when k already occurs in t, InvalidLetter for k = 0.
Insertion f_insert(Letter k, const DistinctWord& t);

// g(k, t) = k t, the companion map under which pix and lec mirror aix and
// des. Throws LetterCollision like f_insert.
DistinctWord g_insert(Letter k, const DistinctWord& t);

// Inverse of f on words that start with k: returns (k, t) with f(k, t) = u.
// Throws EmptyWord on the empty word.
std::pair<Letter, DistinctWord> f_uninsert(const DistinctWord& u);

Permutation phi(const Permutation& p);
// One trace per insertion, rightmost letter of p first.
std::vector<InsertionTrace> phi_traces(const Permutation& p);
Permutation phi_inverse(const Permutation& q);

struct PsiStep {
    std::string label;       // "B3", "B3&B2", ...
    std::set<Letter> letters;
};

// The chain of letter sets in application order (B_k first, B_1 last).
// Each set is computed from p before any step is applied.
std::vector<PsiStep> psi_chain(const Permutation& p);
Permutation psi(const Permutation& p);

enum class Pattern { P321, P312 };

bool avoids(const Permutation& p, Pattern pattern);

}  // namespace permstat

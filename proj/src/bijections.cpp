#include "permstat/bijections.hpp"

#include <algorithm>
#include <span>

#include "permstat/errors.hpp"
#include "permstat/text.hpp"

namespace permstat {

char rule_tag(InsertionRule r) {
    switch (r) {
        case InsertionRule::A: return 'a';
        case InsertionRule::B: return 'b';
        case InsertionRule::C: return 'c';
        case InsertionRule::D: return 'd';
        case InsertionRule::Base: return '0';
    }
    return '?';
}

std::string InsertionTrace::to_string() const {
    std::string out;
    for (const auto& s : steps) {
        if (!out.empty()) out += ' ';
        if (s.rule == InsertionRule::Base) {
            out += "base";
        } else {
            out += rule_tag(s.rule);
            out += '(' + std::to_string(s.prefix_length) + ')';
        }
    }
    return out;
}

namespace {

using Letters = std::vector<Letter>;
using View = std::span<const Letter>;

Letters insert_rec(Letter k, View t, std::vector<InsertionStep>& steps) {
    if (t.empty()) {
        steps.push_back({InsertionRule::Base, 0});
        return {k};
    }
    const auto min_it = std::min_element(t.begin(), t.end());
    const Letter m = *min_it;
    if (k < m) {
        steps.push_back({InsertionRule::D, t.size()});
        Letters out{k};
        out.insert(out.end(), t.begin(), t.end());
        return out;
    }
    const auto idx = static_cast<std::size_t>(min_it - t.begin());
    const View alpha = t.first(idx);
    const View beta = t.subspan(idx + 1);
    if (alpha.empty()) {
        steps.push_back({InsertionRule::B, t.size()});
        Letters out = insert_rec(k, beta, steps);
        out.push_back(m);
        return out;
    }
    if (!beta.empty()) {
        steps.push_back({InsertionRule::A, t.size()});
        Letters out = insert_rec(k, alpha, steps);
        out.push_back(m);
        out.insert(out.end(), beta.begin(), beta.end());
        return out;
    }
    steps.push_back({InsertionRule::C, t.size()});
    Letters out{k, m};
    out.insert(out.end(), alpha.begin(), alpha.end());
    return out;
}

// Returns t with f(u[0], t) = u.
Letters uninsert_rec(View u) {
    if (u.size() <= 1) return {};
    const auto min_it = std::min_element(u.begin(), u.end());
    const Letter m = *min_it;
    const auto idx = static_cast<std::size_t>(min_it - u.begin());
    if (idx == 0) return Letters(u.begin() + 1, u.end());  // rule d
    if (idx + 1 == u.size()) {                              // rule b
        Letters out{m};
        const Letters beta = uninsert_rec(u.first(idx));
        out.insert(out.end(), beta.begin(), beta.end());
        return out;
    }
    if (idx == 1) {  // rule c
        Letters out(u.begin() + 2, u.end());
        out.push_back(m);
        return out;
    }
    Letters out = uninsert_rec(u.first(idx));  // rule a
    out.push_back(m);
    out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(idx) + 1, u.end());
    return out;
}

void check_insertable(Letter k, const DistinctWord& t) {
    if (k == 0) throw InvalidLetter("letter 0 is not allowed");
    if (t.contains(k)) throw LetterCollision("letter " + std::to_string(k) + " already occurs in " + format_word(t));
}

}  // namespace

Insertion f_insert(Letter k, const DistinctWord& t) {
    check_insertable(k, t);
    Insertion out;
    out.word = unchecked_word(insert_rec(k, t.letters(), out.trace.steps));
    return out;
}

DistinctWord g_insert(Letter k, const DistinctWord& t) {
    check_insertable(k, t);
    Letters out{k};
    out.insert(out.end(), t.letters().begin(), t.letters().end());
    return unchecked_word(std::move(out));
}

std::pair<Letter, DistinctWord> f_uninsert(const DistinctWord& u) {
    if (u.empty()) throw EmptyWord("cannot un-insert from the empty word");
    return {u(1), unchecked_word(uninsert_rec(u.letters()))};
}

Permutation phi(const Permutation& p) {
    DistinctWord state;
    const auto l = p.letters();
    std::vector<InsertionStep> scratch;
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
        scratch.clear();
        state = unchecked_word(insert_rec(*it, state.letters(), scratch));
    }
    return Permutation::from(state);
}

std::vector<InsertionTrace> phi_traces(const Permutation& p) {
    std::vector<InsertionTrace> traces;
    DistinctWord state;
    const auto l = p.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
        auto ins = f_insert(*it, state);
        state = std::move(ins.word);
        traces.push_back(std::move(ins.trace));
    }
    return traces;
}

Permutation phi_inverse(const Permutation& q) {
    Letters p;
    p.reserve(q.size());
    DistinctWord state = q.word();
    while (!state.empty()) {
        auto [k, rest] = f_uninsert(state);
        std::vector<InsertionStep> scratch;
        if (insert_rec(k, rest.letters(), scratch) != Letters(state.letters().begin(), state.letters().end())) {
            throw InvariantViolation("f_uninsert failed to invert " + format_word(state));
        }
        p.push_back(k);
        state = std::move(rest);
    }
    return Permutation::from(p);
}

std::vector<PsiStep> psi_chain(const Permutation& p) {
    const auto maxima = left_to_right_maxima(p.word());
    const auto l = p.letters();
    std::vector<std::set<Letter>> b;
    for (std::size_t idx = 0; idx < maxima.positions.size(); ++idx) {
        std::set<Letter> s;
        for (std::size_t j = maxima.positions[idx]; j < l.size(); ++j)
            if (l[j] < maxima.values[idx]) s.insert(l[j]);
        b.push_back(std::move(s));
    }
    std::vector<PsiStep> chain;
    for (std::size_t i = b.size(); i-- > 0;) {
        chain.push_back({"B" + std::to_string(i + 1), b[i]});
        if (i > 0) {
            std::set<Letter> both;
            std::set_intersection(b[i].begin(), b[i].end(), b[i - 1].begin(), b[i - 1].end(),
                                  std::inserter(both, both.end()));
            chain.push_back({"B" + std::to_string(i + 1) + "&B" + std::to_string(i), std::move(both)});
        }
    }
    return chain;
}

Permutation psi(const Permutation& p) {
    DistinctWord w = p.word();
    for (const auto& step : psi_chain(p)) w = complement_subword_on(w, step.letters);
    return Permutation::from(w);
}

bool avoids(const Permutation& p, Pattern pattern) {
    const auto l = p.letters();
    const std::size_t n = l.size();
    if (pattern == Pattern::P321) {
        // A 321 exists iff some middle letter has a larger letter before it
        // and a smaller one after it.
        std::vector<Letter> suffix_min(n + 1, static_cast<Letter>(n + 1));
        for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], l[i]);
        Letter prefix_max = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (prefix_max > l[j] && suffix_min[j + 1] < l[j]) return false;
            prefix_max = std::max(prefix_max, l[j]);
        }
        return true;
    }
    // 312: positions j < k with l[j] < l[k] and a letter above l[k] before j.
    Letter prefix_max = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k)
            if (l[j] < l[k] && prefix_max > l[k]) return false;
        prefix_max = std::max(prefix_max, l[j]);
    }
    return true;
}

}  // namespace permstat

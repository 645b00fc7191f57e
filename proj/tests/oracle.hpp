#pragma once

// Brute-force reference implementations, written straight from the
// definitions on plain vectors. They deliberately share no code with the
// library so that agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<unsigned>;

inline std::uint64_t des(const Word& w) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++c;
    return c;
}

inline std::uint64_t maj(const Word& w) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s += i + 1;
    return s;
}

inline std::uint64_t inv(const Word& w) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

inline std::uint64_t exc(const Word& p) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > i + 1) ++c;
    return c;
}

inline std::uint64_t fix(const Word& p) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == i + 1) ++c;
    return c;
}

inline Word inverse(const Word& p) {
    Word q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] == i + 1) q[i] = static_cast<unsigned>(j + 1);
    return q;
}

// Triple loop, both clauses literally.
inline std::uint64_t ai(const Word& w) {
    const std::size_t n = w.size();
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w[i] <= w[j]) continue;
            bool ok = j + 1 < n && w[j] < w[j + 1];
            for (std::size_t k = i + 1; k < j; ++k)
                if (w[j] > w[k]) ok = true;
            if (ok) ++c;
        }
    }
    return c;
}

inline bool is_hook(const Word& w) {
    if (w.size() < 2 || !(w[0] > w[1])) return false;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) return false;
    return true;
}

// All decompositions into a nondecreasing prefix followed by hooks.
inline std::vector<std::vector<Word>> hook_decompositions(const Word& w) {
    std::vector<std::vector<Word>> found;
    std::vector<Word> cur;
    std::function<void(std::size_t)> rest = [&](std::size_t start) {
        if (start == w.size()) {
            found.push_back(cur);
            return;
        }
        for (std::size_t end = start + 2; end <= w.size(); ++end) {
            Word h(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(end));
            if (!is_hook(h)) continue;
            cur.push_back(h);
            rest(end);
            cur.pop_back();
        }
    };
    for (std::size_t p0 = 0; p0 <= w.size(); ++p0) {
        Word head(w.begin(), w.begin() + static_cast<long>(p0));
        if (!std::is_sorted(head.begin(), head.end())) break;
        cur = {head};
        rest(p0);
    }
    return found;
}

inline std::uint64_t pix(const Word& w) { return hook_decompositions(w).front().front().size(); }

inline std::uint64_t lec(const Word& w) {
    const auto d = hook_decompositions(w).front();
    std::uint64_t s = 0;
    for (std::size_t i = 1; i < d.size(); ++i) s += inv(d[i]);
    return s;
}

inline std::uint64_t aix(const Word& w) {
    if (w.empty()) return 0;
    const auto m = std::min_element(w.begin(), w.end());
    const Word alpha(w.begin(), m);
    const Word beta(m + 1, w.end());
    if (alpha.empty()) return 1 + aix(beta);
    if (beta.empty()) return 0;
    return aix(alpha);
}

inline bool is_lr_max(const Word& w, std::size_t i) {
    for (std::size_t k = 0; k < i; ++k)
        if (w[k] > w[i]) return false;
    return true;
}

// Second clause with the left-to-right-maximum qualifier kept.
inline std::uint64_t mix(const Word& p) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j] && is_lr_max(p, i)) ++c;
            if (p[i] < p[j]) {
                for (std::size_t k = 0; k < i; ++k) {
                    if (is_lr_max(p, k) && p[k] > p[j]) {
                        ++c;
                        break;
                    }
                }
            }
        }
    }
    return c;
}

inline std::uint64_t das(const Word& p) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1] && is_lr_max(p, i)) {
            ++c;
        } else if (p[i] < p[i + 1]) {
            for (std::size_t k = 0; k < i; ++k) {
                if (is_lr_max(p, k) && p[k] > p[i + 1]) {
                    ++c;
                    break;
                }
            }
        }
    }
    return c;
}

inline std::uint64_t rmaj(const Word& p, unsigned r) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1] && p[i] - p[i + 1] >= r) s += i + 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j] && p[i] - p[j] < r) ++s;
    return s;
}

// The insertion recursion evaluated literally, rules tried in the order
// they are written (a, b, c, d) with their own side conditions.
inline Word f(unsigned k, const Word& t) {
    if (t.empty()) return {k};
    const unsigned m = std::min(k, *std::min_element(t.begin(), t.end()));
    if (k == m) {
        Word out{k};
        out.insert(out.end(), t.begin(), t.end());
        return out;
    }
    const auto it = std::find(t.begin(), t.end(), m);
    const Word alpha(t.begin(), it);
    const Word beta(it + 1, t.end());
    if (!alpha.empty() && !beta.empty()) {
        Word out = f(k, alpha);
        out.push_back(m);
        out.insert(out.end(), beta.begin(), beta.end());
        return out;
    }
    if (alpha.empty()) {
        Word out = f(k, beta);
        out.push_back(m);
        return out;
    }
    Word out{k, m};
    out.insert(out.end(), alpha.begin(), alpha.end());
    return out;
}

inline Word phi(const Word& p) {
    Word s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = f(*it, s);
    return s;
}

// Pattern containment by trying every index triple.
inline bool contains_pattern(const Word& p, const Word& pattern) {
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const unsigned v[3] = {p[a], p[b], p[c]};
                bool match = true;
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y)
                        if ((v[x] < v[y]) != (pattern[x] < pattern[y])) match = false;
                if (match) return true;
            }
    return false;
}

inline std::vector<Word> all_perms(unsigned n) {
    Word p(n);
    std::iota(p.begin(), p.end(), 1u);
    std::vector<Word> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace oracle

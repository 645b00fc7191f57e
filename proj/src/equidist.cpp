#include "permstat/equidist.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <thread>

#include "permstat/errors.hpp"

namespace permstat {

std::size_t size_cap_from_env() {
    const char* raw = std::getenv("PERMSTAT_NMAX");
    if (raw == nullptr || *raw == '\0') return kDefaultSizeCap;
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end) return kDefaultSizeCap;
    return value;
}

PermutationSource PermutationSource::all(std::size_t n) {
    PermutationSource s;
    s.kind_ = Kind::All;
    s.n_ = n;
    return s;
}

PermutationSource PermutationSource::avoiding(std::size_t n, Pattern pattern) {
    PermutationSource s;
    s.kind_ = Kind::Avoiding;
    s.n_ = n;
    s.pattern_ = pattern;
    return s;
}

PermutationSource PermutationSource::explicit_list(std::vector<Permutation> perms) {
    PermutationSource s;
    s.kind_ = Kind::Explicit;
    s.n_ = perms.empty() ? 0 : perms.front().size();
    for (const auto& p : perms) {
        if (p.size() != s.n_) throw ArityMismatch("explicit permutation list mixes sizes");
    }
    s.perms_ = std::move(perms);
    return s;
}

void PermutationSource::check_cap(std::size_t cap) const {
    if (n_ > cap) {
        throw SizeCapExceeded("n = " + std::to_string(n_) + " exceeds the enumeration cap " + std::to_string(cap) +
                              " (set PERMSTAT_NMAX to raise it)");
    }
}

namespace {

bool admits(const PermutationSource& src, const Permutation& p) {
    return src.kind() != PermutationSource::Kind::Avoiding || avoids(p, src.pattern());
}

}  // namespace

void for_each_in_block(const PermutationSource& src, Letter first, const PermutationVisitor& visit) {
    if (src.kind() == PermutationSource::Kind::Explicit) {
        for (const auto& p : src.perms())
            if (!p.empty() && p(1) == first) visit(p);
        return;
    }
    const std::size_t n = src.n();
    if (first < 1 || first > n) return;
    std::vector<Letter> letters;
    letters.reserve(n);
    letters.push_back(first);
    for (Letter x = 1; x <= n; ++x)
        if (x != first) letters.push_back(x);
    do {
        const auto p = Permutation::from(letters);
        if (admits(src, p)) visit(p);
    } while (std::next_permutation(letters.begin() + 1, letters.end()));
}

void for_each_permutation(const PermutationSource& src, const PermutationVisitor& visit, std::size_t cap) {
    src.check_cap(cap);
    if (src.kind() == PermutationSource::Kind::Explicit) {
        for (const auto& p : src.perms()) visit(p);
        return;
    }
    if (src.n() == 0) {
        visit(Permutation{});
        return;
    }
    for (Letter first = 1; first <= src.n(); ++first) for_each_in_block(src, first, visit);
}

std::vector<Permutation> enumerate(const PermutationSource& src, std::size_t cap) {
    std::vector<Permutation> out;
    for_each_permutation(src, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

namespace {

void extend_words(std::size_t alphabet, std::size_t len, std::vector<Letter>& cur, std::vector<bool>& used,
                  const std::function<void(const DistinctWord&)>& visit) {
    if (cur.size() == len) {
        visit(unchecked_word(cur));
        return;
    }
    for (Letter x = 1; x <= alphabet; ++x) {
        if (used[x]) continue;
        used[x] = true;
        cur.push_back(x);
        extend_words(alphabet, len, cur, used, visit);
        cur.pop_back();
        used[x] = false;
    }
}

}  // namespace

void for_each_distinct_word(std::size_t alphabet, std::size_t max_len,
                            const std::function<void(const DistinctWord&)>& visit) {
    std::vector<Letter> cur;
    std::vector<bool> used(alphabet + 1, false);
    for (std::size_t len = 0; len <= std::min(max_len, alphabet); ++len) extend_words(alphabet, len, cur, used, visit);
}

void JointDistribution::add(const StatTuple& values, std::uint64_t count) {
    if (values.size() != names_.size()) throw ArityMismatch("tuple arity does not match statistic count");
    if (count == 0) return;
    counts_[values] += count;
    total_ += count;
}

void JointDistribution::merge(const JointDistribution& other) {
    if (other.arity() != arity()) throw ArityMismatch("cannot merge distributions of different arity");
    for (const auto& [k, c] : other.counts_) counts_[k] += c;
    total_ += other.total_;
}

JointDistribution joint_distribution(const PermutationSource& src, const std::vector<std::string>& names,
                                     const DistributionOptions& options) {
    src.check_cap(options.cap);
    const auto stats = parse_statistics(names);
    std::vector<std::string> canonical;
    for (const auto& s : stats) canonical.push_back(s.name());

    auto tally_into = [&stats](JointDistribution& d) {
        return [&d, &stats](const Permutation& p) {
            StatTuple t;
            t.reserve(stats.size());
            for (const auto& s : stats) t.push_back(evaluate(s, p));
            d.add(t);
        };
    };

    JointDistribution result(canonical);
    std::size_t threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    const std::size_t blocks = src.n();
    if (threads <= 1 || blocks <= 1) {
        for_each_permutation(src, tally_into(result), options.cap);
        return result;
    }

    // One partial per first letter; merge order is irrelevant.
    threads = std::min(threads, blocks);
    std::vector<JointDistribution> partials(blocks, JointDistribution(canonical));
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t b = w; b < blocks; b += threads) {
                    for_each_in_block(src, static_cast<Letter>(b + 1), tally_into(partials[b]));
                }
            });
        }
    }
    for (const auto& part : partials) result.merge(part);
    return result;
}

Comparison distributions_equal(const JointDistribution& a, const JointDistribution& b) {
    if (a.arity() != b.arity()) {
        throw ArityMismatch("distributions have arity " + std::to_string(a.arity()) + " and " +
                            std::to_string(b.arity()));
    }
    auto ia = a.counts().begin();
    auto ib = b.counts().begin();
    const auto ea = a.counts().end();
    const auto eb = b.counts().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) return {false, Divergence{ia->first, ia->second, 0}};
        if (ia == ea || ib->first < ia->first) return {false, Divergence{ib->first, 0, ib->second}};
        if (ia->second != ib->second) return {false, Divergence{ia->first, ia->second, ib->second}};
        ++ia;
        ++ib;
    }
    return {true, std::nullopt};
}

}  // namespace permstat

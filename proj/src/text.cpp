#include "permstat/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ParsedWord parse_word(std::string_view text) {
    const auto first = std::find_if_not(text.begin(), text.end(), is_space);
    const auto last = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
    if (first >= last) return {DistinctWord{}, WordStyle::Compact};
    const std::string_view body(&*first, static_cast<std::size_t>(last - first));

    std::vector<Letter> letters;
    const bool spaced = std::any_of(body.begin(), body.end(), is_space);
    if (!spaced) {
        for (char c : body) {
            if (!is_digit(c)) throw ParseError("unexpected character '" + std::string(1, c) + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    } else {
        std::size_t i = 0;
        while (i < body.size()) {
            if (is_space(body[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < body.size() && !is_space(body[j])) ++j;
            const std::string_view tok = body.substr(i, j - i);
            Letter value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw ParseError("not a natural number: '" + std::string(tok) + "'");
            }
            letters.push_back(value);
            i = j;
        }
    }
    return {DistinctWord::from(letters), spaced ? WordStyle::Spaced : WordStyle::Compact};
}

Permutation parse_permutation(std::string_view text) { return Permutation::from(parse_word(text).word); }

std::string format_word(const DistinctWord& w, WordStyle style) {
    const auto l = w.letters();
    const bool compact =
        style == WordStyle::Compact && std::all_of(l.begin(), l.end(), [](Letter x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(l[i]);
    }
    return out;
}

}  // namespace permstat

#pragma once

// One-line notation I/O.
//
// Two input forms are accepted: whitespace-separated naturals ("3 1 2") and
// compact digit strings ("312"). The presence of whitespace decides which
// one applies. Compact output is used only when every letter is <= 9.

#include <string>
#include <string_view>

#include "permstat/word.hpp"

namespace permstat {

enum class WordStyle { Compact, Spaced };

struct ParsedWord {
    DistinctWord word;
    WordStyle style;
};

// Throws ParseError on malformed text, DuplicateLetter / InvalidLetter on
// words that break the distinctness invariant.
ParsedWord parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);

std::string format_word(const DistinctWord& w, WordStyle style = WordStyle::Compact);

}  // namespace permstat

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kwclass {

// How keywords are matched against tokens. Exact is the default everywhere;
// prefix additionally counts tokens that merely start with the keyword
// ("damage" then also matches "damages").
enum class MatchMode { exact, prefix };

// Accepts "exact" or "prefix".
MatchMode parse_match_mode(std::string_view name);

const char* to_string(MatchMode mode);

// Token -> occurrence count for one text. total is the token count, i.e. the
// sum of all values.
struct TokenCounts {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

// Splits text into maximal runs of word characters, case-folded, in text
// order. ASCII letters and digits are word characters; so is every other
// code point except Unicode whitespace and a handful of common punctuation
// marks. Folding covers ASCII plus the one-to-one Latin-1 / Latin Extended-A
// / Greek / Cyrillic mappings. Malformed UTF-8 bytes act as separators.
// Total function, never throws.
std::vector<std::string> normalize(std::string_view text);

TokenCounts count_tokens(std::span<const std::string> tokens);

// Occurrence count of each keyword in already-counted tokens, index-aligned
// with `keywords`. Keywords are expected to be single normalize()d tokens.
std::vector<std::uint64_t> keyword_occurrences(const TokenCounts& tc,
                                               std::span<const std::string> keywords,
                                               MatchMode mode = MatchMode::exact);

}  // namespace kwclass

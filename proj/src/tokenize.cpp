#include "kwclass/tokenize.hpp"

#include <stdexcept>

namespace kwclass {

namespace {

// One-to-one case folds for the ranges that show up in western-language
// text. Every target maps to itself, so folding is idempotent.
char32_t fold(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 32;
    if (c == 0xb5) return 0x3bc;  // micro sign -> Greek mu
    if (c >= 0xc0 && c <= 0xde && c != 0xd7) return c + 32;        // Latin-1
    if (c >= 0x100 && c <= 0x12f) return c | 1;                    // Latin Ext-A, even upper
    if (c >= 0x132 && c <= 0x137) return c | 1;
    if (c >= 0x139 && c <= 0x148) return ((c + 1) | 1) - 1;        // odd upper
    if (c >= 0x14a && c <= 0x177) return c | 1;
    if (c == 0x178) return 0xff;  // Y with diaeresis
    if (c >= 0x179 && c <= 0x17e) return ((c + 1) | 1) - 1;
    if (c >= 0x391 && c <= 0x3ab && c != 0x3a2) return c + 32;     // Greek
    if (c >= 0x410 && c <= 0x42f) return c + 32;                   // Cyrillic
    if (c >= 0x400 && c <= 0x40f) return c + 80;
    return c;
}

// Non-ASCII separators: Unicode whitespace plus common dash/quote/ellipsis
// punctuation. Everything else beyond ASCII counts as a word character.
bool is_separator(char32_t c) {
    switch (c) {
        case 0xa0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202f:
        case 0x205f:
        case 0x3000:
        case 0x2018:
        case 0x2019:
        case 0x201c:
        case 0x201d:
        case 0x2026:
            return true;
        default:
            return (c >= 0x2000 && c <= 0x200a) || (c >= 0x2010 && c <= 0x2015);
    }
}

// Decodes the code point starting at s[i] and advances i past it. Returns
// false for malformed sequences, consuming a single byte.
bool decode_utf8(std::string_view s, std::size_t& i, char32_t& out) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
        out = b0;
        ++i;
        return true;
    } else if (b0 >= 0xc2 && b0 <= 0xdf) {
        len = 2;
        cp = b0 & 0x1f;
    } else if (b0 >= 0xe0 && b0 <= 0xef) {
        len = 3;
        cp = b0 & 0x0f;
    } else if (b0 >= 0xf0 && b0 <= 0xf4) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return false;
    }
    if (i + len > s.size()) {
        ++i;
        return false;
    }
    for (std::size_t j = 1; j < len; ++j) {
        const auto b = static_cast<unsigned char>(s[i + j]);
        if ((b & 0xc0) != 0x80) {
            ++i;
            return false;
        }
        cp = (cp << 6) | (b & 0x3f);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    if ((len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xd800 && cp <= 0xdfff) || cp > 0x10ffff) {
        ++i;
        return false;
    }
    i += len;
    out = cp;
    return true;
}

void append_utf8(std::string& out, char32_t c) {
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3f)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3f)));
    }
}

void flush(std::string& cur, std::vector<std::string>& tokens) {
    if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
    }
}

}  // namespace

MatchMode parse_match_mode(std::string_view name) {
    if (name == "exact") return MatchMode::exact;
    if (name == "prefix") return MatchMode::prefix;
    throw std::invalid_argument("unknown match mode '" + std::string(name) +
                                "' (expected exact or prefix)");
}

const char* to_string(MatchMode mode) {
    return mode == MatchMode::exact ? "exact" : "prefix";
}

std::vector<std::string> normalize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b = static_cast<unsigned char>(text[i]);
        if (b < 0x80) {
            ++i;
            if (b >= 'a' && b <= 'z') {
                cur.push_back(static_cast<char>(b));
            } else if (b >= 'A' && b <= 'Z') {
                cur.push_back(static_cast<char>(b + 32));
            } else if (b >= '0' && b <= '9') {
                cur.push_back(static_cast<char>(b));
            } else {
                flush(cur, tokens);
            }
        } else {
            char32_t cp;
            if (!decode_utf8(text, i, cp) || is_separator(cp)) {
                flush(cur, tokens);
            } else {
                append_utf8(cur, fold(cp));
            }
        }
    }
    flush(cur, tokens);
    return tokens;
}

TokenCounts count_tokens(std::span<const std::string> tokens) {
    TokenCounts tc;
    tc.counts.reserve(tokens.size());
    for (const auto& t : tokens) ++tc.counts[t];
    tc.total = tokens.size();
    return tc;
}

std::vector<std::uint64_t> keyword_occurrences(const TokenCounts& tc,
                                               std::span<const std::string> keywords,
                                               MatchMode mode) {
    std::vector<std::uint64_t> out(keywords.size(), 0);
    if (mode == MatchMode::exact) {
        for (std::size_t i = 0; i < keywords.size(); ++i) {
            auto it = tc.counts.find(keywords[i]);
            if (it != tc.counts.end()) out[i] = it->second;
        }
    } else {
        for (const auto& [token, n] : tc.counts) {
            for (std::size_t i = 0; i < keywords.size(); ++i) {
                if (token.starts_with(keywords[i])) out[i] += n;
            }
        }
    }
    return out;
}

}  // namespace kwclass

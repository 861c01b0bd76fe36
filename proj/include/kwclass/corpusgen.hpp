#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwclass/corpus.hpp"

namespace kwclass {

// Recipe for a reproducible synthetic labeled corpus. Positive documents
// draw each token from vocab_pos with probability pos_keyword_rate and from
// the built-in filler list otherwise; negative documents likewise from
// vocab_neg at neg_keyword_rate. Tokens come from a single SplitMix64 stream
// seeded with `seed`, so a spec always produces the same corpus, bit for
// bit.
struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::vector<std::string> vocab_pos;
    std::vector<std::string> vocab_neg;
    std::size_t doc_len_min = 0;  // token counts, inclusive
    std::size_t doc_len_max = 0;
    double pos_keyword_rate = 0.0;
    double neg_keyword_rate = 0.0;
};

// JSON object with the GenSpec field names; doc_len_min/doc_len_max are
// carried as "doc_len_range": [min, max].
GenSpec load_gen_spec(const std::filesystem::path& path);

// The fixed embedded filler vocabulary (~1000 common English words). Keyword
// pools must be disjoint from it so that keyword rates are unambiguous.
std::span<const std::string_view> filler_words();

// Document texts are space-joined token streams, so they re-tokenize to
// exactly the generated tokens. Throws std::invalid_argument naming the
// offending GenSpec field when the spec is invalid.
LabeledCorpus generate(const GenSpec& spec);

// Writes the corpus in the directory layout load_corpus expects, one file
// per document id.
void write_corpus(const LabeledCorpus& corpus, const std::filesystem::path& root);

}  // namespace kwclass

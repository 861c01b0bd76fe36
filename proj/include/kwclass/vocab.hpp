#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "kwclass/corpus.hpp"
#include "kwclass/tokenize.hpp"

namespace kwclass {

// Human-curated candidate keywords, in file order, normalized and pairwise
// distinct.
struct CandidateSet {
    std::vector<std::string> keywords;
    std::string source;  // path the set was loaded from
};

struct ModelMetadata {
    std::uint64_t train_docs = 0;  // label-1 documents tallied
    std::string candidates_file;
    std::string built_at;  // ISO 8601 UTC

    bool operator==(const ModelMetadata&) const = default;
};

// Corpus feature vector: the k highest-count candidates over the training
// corpus. keywords and counts are parallel; counts are positive and
// non-increasing, with ties ordered by ascending keyword.
struct ModelVector {
    std::vector<std::string> keywords;
    std::vector<std::uint64_t> counts;
    std::size_t k = 0;
    ModelMetadata metadata;

    bool operator==(const ModelVector&) const = default;
};

// One (keyword, total count) row per candidate, in candidate order.
using KeywordTally = std::vector<std::pair<std::string, std::uint64_t>>;

// Candidate file format: UTF-8 text, one keyword per line, '#' starts a
// comment line, blank lines ignored. Each keyword must normalize to a single
// token; duplicates after normalization are rejected.
CandidateSet load_candidates(const std::filesystem::path& path);

// Total occurrences of every candidate over the label-1 documents of train.
// Candidates absent everywhere tally 0.
KeywordTally tally_candidates(const CandidateSet& candidates, const LabeledCorpus& train,
                              MatchMode mode = MatchMode::exact);

// The k highest-count keywords ordered by (count desc, keyword asc). Only
// keywords with nonzero counts are eligible; throws
// InsufficientVocabularyError when fewer than k qualify.
ModelVector select_top_k(const KeywordTally& tallies, std::size_t k,
                         ModelMetadata metadata = {});

// Model file: JSON object
//   { "k": int, "keywords": [string...], "counts": [int...],
//     "metadata": { "train_docs": int, "candidates_file": string,
//                   "built_at": string } }
// load_model re-validates every model invariant and throws
// ModelValidationError naming the violated one.
void save_model(const ModelVector& model, const std::filesystem::path& path);
ModelVector load_model(const std::filesystem::path& path);
void validate_model(const ModelVector& model);

// ISO 8601 UTC wall-clock time, for ModelMetadata::built_at.
std::string current_timestamp();

}  // namespace kwclass

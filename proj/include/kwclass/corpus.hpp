#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kwclass {

// One document's extracted plain text. id is the root-relative path with
// '/' separators and is unique within a corpus.
struct Document {
    std::string id;
    std::string text;
    std::optional<int> label;  // 1 = positive class, 0 = others

    bool operator==(const Document&) const = default;
};

// Documents ordered by id, ids pairwise distinct, every label in {0, 1}.
struct LabeledCorpus {
    std::vector<Document> docs;

    std::size_t size() const { return docs.size(); }
    std::size_t count_label(int label) const;

    bool operator==(const LabeledCorpus&) const = default;
};

// Loads a labeled corpus of UTF-8 plain text files. Without a manifest the
// layout convention is
//   <root>/positive/*.txt  -> label 1
//   <root>/others/*.txt    -> label 0
// With a manifest (CSV, header "path,label", label 0 or 1, paths relative to
// root) exactly the listed files are loaded. Documents come back ordered by
// id, so identical trees always yield identical corpora.
LabeledCorpus load_corpus(const std::filesystem::path& root,
                          const std::optional<std::filesystem::path>& manifest = std::nullopt);

// Seeded-shuffle split of the positive class: train receives exactly
// train_count label-1 documents, test receives the remaining label-1
// documents plus every label-0 document. Requires
// 0 < train_count < (number of label-1 documents). Deterministic for a
// fixed seed.
std::pair<LabeledCorpus, LabeledCorpus> split_corpus(const LabeledCorpus& corpus,
                                                     std::size_t train_count,
                                                     std::uint64_t seed);

}  // namespace kwclass

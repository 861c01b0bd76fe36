#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kwclass/corpus.hpp"
#include "kwclass/tokenize.hpp"
#include "kwclass/vocab.hpp"

namespace kwclass {

// Document feature vector: per-keyword occurrence counts, index-aligned with
// the model's keyword order.
struct DocVector {
    std::vector<std::uint64_t> counts;

    bool operator==(const DocVector&) const = default;
};

struct Decision {
    double similarity = 0.0;  // in [0, 1]
    int label = 0;            // 1 iff similarity >= threshold
    double threshold = 0.0;
};

DocVector doc_vector(const ModelVector& model, const Document& doc,
                     MatchMode mode = MatchMode::exact);

// a.b / (|a||b|). Zero when either vector has zero norm, so keyword-free
// documents score 0. Requires equal nonzero lengths; in [0, 1] for
// non-negative inputs.
double cosine_similarity(std::span<const double> a, std::span<const double> b);
double cosine_similarity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// Scores doc against the model and labels it: 0 when the similarity falls
// strictly below threshold, 1 otherwise. threshold must be in [0, 1].
Decision classify(const ModelVector& model, const Document& doc, double threshold,
                  MatchMode mode = MatchMode::exact);

}  // namespace kwclass

#include "kwclass/classify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kwclass {

namespace {

template <typename T>
double cosine_impl(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("cosine_similarity: vectors must have equal nonzero length (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = static_cast<double>(a[i]);
        const double y = static_cast<double>(b[i]);
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): the product of the
    // squared norms of proportional count vectors is a perfect square, so
    // parallel vectors score exactly 1.
    const double sim = dot / std::sqrt(na * nb);
    return sim > 1.0 ? 1.0 : sim;
}

}  // namespace

DocVector doc_vector(const ModelVector& model, const Document& doc, MatchMode mode) {
    const auto tc = count_tokens(normalize(doc.text));
    return DocVector{keyword_occurrences(tc, model.keywords, mode)};
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    return cosine_impl(a, b);
}

double cosine_similarity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return cosine_impl(a, b);
}

Decision classify(const ModelVector& model, const Document& doc, double threshold,
                  MatchMode mode) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("classify: threshold must be in [0, 1], got " +
                                    std::to_string(threshold));
    }
    const DocVector dv = doc_vector(model, doc, mode);
    const double sim = cosine_similarity(std::span<const std::uint64_t>(model.counts),
                                         std::span<const std::uint64_t>(dv.counts));
    return Decision{sim, sim >= threshold ? 1 : 0, threshold};
}

}  // namespace kwclass

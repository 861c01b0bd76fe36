#include "kwclass/vocab.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "kwclass/errors.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace kwclass {

namespace {

bool row_before(const std::pair<std::string, std::uint64_t>& a,
                const std::pair<std::string, std::uint64_t>& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
}

// Reads a JSON integer field that must be strictly positive; `what` names
// the offending invariant in the error.
std::uint64_t positive_count(const nlohmann::json& v, const std::string& what) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ModelValidationError("non-positive count: " + what + " is not an integer");
    }
    if (v.is_number_integer() && v.get<std::int64_t>() <= 0) {
        throw ModelValidationError("non-positive count: " + what + " = " +
                                   std::to_string(v.get<std::int64_t>()));
    }
    return v.get<std::uint64_t>();
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ModelValidationError(std::string("model file missing field '") + key + "'");
    }
    return *it;
}

}  // namespace

CandidateSet load_candidates(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read: " + path.string());

    CandidateSet set;
    set.source = path.string();
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tokens = normalize(line);
        if (tokens.size() != 1) {
            throw std::runtime_error("candidate '" + line + "' (line " + std::to_string(lineno) +
                                     " of " + path.string() +
                                     ") does not normalize to a single token");
        }
        if (!seen.insert(tokens[0]).second) {
            throw std::runtime_error("duplicate candidate keyword '" + tokens[0] + "' (line " +
                                     std::to_string(lineno) + " of " + path.string() + ")");
        }
        set.keywords.push_back(std::move(tokens[0]));
    }
    if (set.keywords.empty()) {
        throw std::runtime_error("empty candidate set: " + path.string());
    }
    return set;
}

KeywordTally tally_candidates(const CandidateSet& candidates, const LabeledCorpus& train,
                              MatchMode mode) {
    if (train.docs.empty()) {
        throw std::invalid_argument("tally_candidates: empty training corpus");
    }
    std::vector<std::uint64_t> totals(candidates.keywords.size(), 0);
    for (const auto& doc : train.docs) {
        if (doc.label != 1) continue;
        const auto tc = count_tokens(normalize(doc.text));
        const auto occ = keyword_occurrences(tc, candidates.keywords, mode);
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += occ[i];
    }
    KeywordTally tally;
    tally.reserve(totals.size());
    for (std::size_t i = 0; i < totals.size(); ++i) {
        tally.emplace_back(candidates.keywords[i], totals[i]);
    }
    return tally;
}

ModelVector select_top_k(const KeywordTally& tallies, std::size_t k, ModelMetadata metadata) {
    if (k == 0) throw std::invalid_argument("select_top_k: k must be >= 1");

    KeywordTally eligible;
    eligible.reserve(tallies.size());
    for (const auto& row : tallies) {
        if (row.second > 0) eligible.push_back(row);
    }
    if (eligible.size() < k) throw InsufficientVocabularyError(eligible.size(), k);

    std::partial_sort(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(k),
                      eligible.end(), row_before);

    ModelVector model;
    model.k = k;
    model.metadata = std::move(metadata);
    model.keywords.reserve(k);
    model.counts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        model.keywords.push_back(std::move(eligible[i].first));
        model.counts.push_back(eligible[i].second);
    }
    return model;
}

void validate_model(const ModelVector& model) {
    if (model.keywords.size() != model.counts.size() || model.keywords.size() != model.k) {
        throw ModelValidationError(
            "length mismatch: k=" + std::to_string(model.k) + ", " +
            std::to_string(model.keywords.size()) + " keyword(s), " +
            std::to_string(model.counts.size()) + " count(s)");
    }
    for (std::size_t i = 0; i < model.counts.size(); ++i) {
        if (model.counts[i] == 0) {
            throw ModelValidationError("non-positive count: keyword '" + model.keywords[i] +
                                       "' has count 0");
        }
    }
    for (std::size_t i = 1; i < model.counts.size(); ++i) {
        if (model.counts[i] > model.counts[i - 1]) {
            throw ModelValidationError("unsorted counts: " + std::to_string(model.counts[i - 1]) +
                                       " before " + std::to_string(model.counts[i]));
        }
        if (model.counts[i] == model.counts[i - 1] &&
            model.keywords[i] <= model.keywords[i - 1]) {
            throw ModelValidationError("unsorted counts: tie between '" + model.keywords[i - 1] +
                                       "' and '" + model.keywords[i] +
                                       "' is not in ascending keyword order");
        }
    }
    std::unordered_set<std::string> seen;
    for (const auto& kw : model.keywords) {
        if (!seen.insert(kw).second) {
            throw ModelValidationError("duplicate keyword '" + kw + "'");
        }
    }
}

void save_model(const ModelVector& model, const fs::path& path) {
    validate_model(model);
    ordered_json j;
    j["k"] = model.k;
    j["keywords"] = model.keywords;
    j["counts"] = model.counts;
    j["metadata"] = {{"train_docs", model.metadata.train_docs},
                     {"candidates_file", model.metadata.candidates_file},
                     {"built_at", model.metadata.built_at}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write: " + path.string());
}

ModelVector load_model(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path.string());

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ModelValidationError("model file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ModelValidationError("model file is not a JSON object");

    ModelVector model;
    try {
        const auto& k = require_field(j, "k");
        if (!k.is_number_integer() && !k.is_number_unsigned()) {
            throw ModelValidationError("field 'k' is not an integer");
        }
        if (k.is_number_integer() && k.get<std::int64_t>() < 0) {
            throw ModelValidationError("field 'k' is negative");
        }
        model.k = k.get<std::size_t>();
        model.keywords = require_field(j, "keywords").get<std::vector<std::string>>();
        for (const auto& c : require_field(j, "counts")) {
            model.counts.push_back(positive_count(c, "count"));
        }
        const auto& meta = require_field(j, "metadata");
        model.metadata.train_docs = require_field(meta, "train_docs").get<std::uint64_t>();
        model.metadata.candidates_file =
            require_field(meta, "candidates_file").get<std::string>();
        model.metadata.built_at = require_field(meta, "built_at").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ModelValidationError("malformed model file: " + std::string(e.what()));
    }
    validate_model(model);
    return model;
}

std::string current_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace kwclass

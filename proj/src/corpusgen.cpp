#include "kwclass/corpusgen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "kwclass/errors.hpp"
#include "kwclass/rng.hpp"
#include "kwclass/tokenize.hpp"

namespace fs = std::filesystem;

namespace kwclass {

namespace {

void check_pool(const std::vector<std::string>& pool, const char* field) {
    if (pool.empty()) {
        throw std::invalid_argument(std::string(field) + " must not be empty");
    }
    std::unordered_set<std::string_view> filler(filler_words().begin(), filler_words().end());
    std::unordered_set<std::string> seen;
    for (const auto& word : pool) {
        const auto tokens = normalize(word);
        if (tokens.size() != 1 || tokens[0] != word) {
            throw std::invalid_argument(std::string(field) + ": '" + word +
                                        "' does not survive normalization");
        }
        if (filler.count(word) > 0) {
            throw std::invalid_argument(std::string(field) + ": '" + word +
                                        "' collides with the filler vocabulary");
        }
        if (!seen.insert(word).second) {
            throw std::invalid_argument(std::string(field) + ": duplicate word '" + word + "'");
        }
    }
}

void validate_spec(const GenSpec& spec) {
    if (spec.doc_len_min > spec.doc_len_max) {
        throw std::invalid_argument("doc_len_range: min exceeds max");
    }
    if (!(spec.pos_keyword_rate >= 0.0 && spec.pos_keyword_rate <= 1.0)) {
        throw std::invalid_argument("pos_keyword_rate must be in [0, 1]");
    }
    if (!(spec.neg_keyword_rate >= 0.0 && spec.neg_keyword_rate <= 1.0)) {
        throw std::invalid_argument("neg_keyword_rate must be in [0, 1]");
    }
    check_pool(spec.vocab_pos, "vocab_pos");
    check_pool(spec.vocab_neg, "vocab_neg");
}

std::string make_doc(SplitMix64& rng, const std::vector<std::string>& pool, double rate,
                     std::size_t len_min, std::size_t len_max) {
    const std::size_t len = len_min + rng.bounded(len_max - len_min + 1);
    const auto filler = filler_words();
    std::string text;
    text.reserve(len * 8);
    for (std::size_t i = 0; i < len; ++i) {
        const std::string_view tok = rng.next_double() < rate
                                         ? std::string_view(pool[rng.bounded(pool.size())])
                                         : filler[rng.bounded(filler.size())];
        if (!text.empty()) text.push_back(' ');
        text.append(tok);
    }
    return text;
}

}  // namespace

LabeledCorpus generate(const GenSpec& spec) {
    validate_spec(spec);

    SplitMix64 rng(spec.seed);
    LabeledCorpus corpus;
    corpus.docs.reserve(spec.n_pos + spec.n_neg);
    char name[64];
    // Positive documents consume the stream first, then negative ones.
    for (std::size_t i = 0; i < spec.n_pos; ++i) {
        std::snprintf(name, sizeof name, "positive/%05zu.txt", i);
        corpus.docs.push_back({name,
                               make_doc(rng, spec.vocab_pos, spec.pos_keyword_rate,
                                        spec.doc_len_min, spec.doc_len_max),
                               1});
    }
    for (std::size_t i = 0; i < spec.n_neg; ++i) {
        std::snprintf(name, sizeof name, "others/%05zu.txt", i);
        corpus.docs.push_back({name,
                               make_doc(rng, spec.vocab_neg, spec.neg_keyword_rate,
                                        spec.doc_len_min, spec.doc_len_max),
                               0});
    }
    // Keep the corpus in id order, same as load_corpus.
    std::sort(corpus.docs.begin(), corpus.docs.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    return corpus;
}

void write_corpus(const LabeledCorpus& corpus, const fs::path& root) {
    for (const auto& doc : corpus.docs) {
        const fs::path path = root / doc.id;
        fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + path.string());
        out << doc.text;
        if (!out) throw std::runtime_error("cannot write: " + path.string());
    }
}

GenSpec load_gen_spec(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read: " + path.string());

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("spec file is not valid JSON: " + std::string(e.what()));
    }

    auto field = [&](const char* key) -> const nlohmann::json& {
        auto it = j.find(key);
        if (it == j.end()) {
            throw std::runtime_error(std::string("spec missing field '") + key + "'");
        }
        return *it;
    };

    GenSpec spec;
    try {
        spec.seed = field("seed").get<std::uint64_t>();
        spec.n_pos = field("n_pos").get<std::size_t>();
        spec.n_neg = field("n_neg").get<std::size_t>();
        spec.vocab_pos = field("vocab_pos").get<std::vector<std::string>>();
        spec.vocab_neg = field("vocab_neg").get<std::vector<std::string>>();
        const auto& range = field("doc_len_range");
        if (!range.is_array() || range.size() != 2) {
            throw std::runtime_error("spec field 'doc_len_range' must be [min, max]");
        }
        spec.doc_len_min = range[0].get<std::size_t>();
        spec.doc_len_max = range[1].get<std::size_t>();
        spec.pos_keyword_rate = field("pos_keyword_rate").get<double>();
        spec.neg_keyword_rate = field("neg_keyword_rate").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed spec file: " + std::string(e.what()));
    }
    return spec;
}

}  // namespace kwclass

#include "kwclass/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "kwclass/errors.hpp"
#include "kwclass/rng.hpp"

namespace fs = std::filesystem;

namespace kwclass {

namespace {

std::string read_file(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read: " + path.string());
    return std::move(buf).str();
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Relative paths and labels in deterministic order, from the directory
// convention.
std::vector<std::pair<std::string, int>> scan_layout(const fs::path& root) {
    std::vector<std::pair<std::string, int>> entries;
    const std::pair<const char*, int> classes[] = {{"positive", 1}, {"others", 0}};
    for (const auto& [sub, label] : classes) {
        const fs::path dir = root / sub;
        if (!fs::is_directory(dir)) continue;
        for (const auto& e : fs::directory_iterator(dir)) {
            if (!e.is_regular_file() || e.path().extension() != ".txt") continue;
            entries.emplace_back(std::string(sub) + "/" + e.path().filename().string(), label);
        }
    }
    return entries;
}

std::vector<std::pair<std::string, int>> read_manifest(const fs::path& manifest) {
    if (!fs::exists(manifest)) throw FileNotFoundError(manifest.string());
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot read: " + manifest.string());

    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("manifest missing 'path,label' header: " + manifest.string());
    }
    strip_cr(line);
    if (line != "path,label") {
        throw std::runtime_error("manifest header must be 'path,label', got '" + line + "'");
    }

    std::vector<std::pair<std::string, int>> entries;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find_last_of(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": expected 'path,label'");
        }
        const std::string path = line.substr(0, comma);
        const std::string label = line.substr(comma + 1);
        if (path.empty() || (label != "0" && label != "1")) {
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": label must be 0 or 1");
        }
        entries.emplace_back(path, label == "1" ? 1 : 0);
    }
    return entries;
}

}  // namespace

std::size_t LabeledCorpus::count_label(int label) const {
    return static_cast<std::size_t>(
        std::count_if(docs.begin(), docs.end(),
                      [label](const Document& d) { return d.label == label; }));
}

LabeledCorpus load_corpus(const fs::path& root, const std::optional<fs::path>& manifest) {
    if (!fs::is_directory(root)) throw FileNotFoundError(root.string());

    auto entries = manifest ? read_manifest(*manifest) : scan_layout(root);
    std::sort(entries.begin(), entries.end());

    LabeledCorpus corpus;
    corpus.docs.reserve(entries.size());
    std::unordered_set<std::string> seen;
    for (const auto& [rel, label] : entries) {
        if (!seen.insert(rel).second) {
            throw std::runtime_error("duplicate document id: " + rel);
        }
        corpus.docs.push_back({rel, read_file(root / rel), label});
    }
    if (corpus.docs.empty()) throw std::runtime_error("empty corpus: " + root.string());
    return corpus;
}

std::pair<LabeledCorpus, LabeledCorpus> split_corpus(const LabeledCorpus& corpus,
                                                     std::size_t train_count,
                                                     std::uint64_t seed) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
        if (corpus.docs[i].label == 1) pos.push_back(i);
    }
    if (train_count == 0 || train_count >= pos.size()) {
        throw std::invalid_argument("split_corpus: train_count must be in (0, " +
                                    std::to_string(pos.size()) + "), got " +
                                    std::to_string(train_count));
    }

    // Fisher-Yates over the positive indices, then a prefix-take.
    SplitMix64 rng(seed);
    for (std::size_t i = pos.size() - 1; i > 0; --i) {
        std::swap(pos[i], pos[rng.bounded(i + 1)]);
    }
    std::unordered_set<std::size_t> train_set(pos.begin(),
                                              pos.begin() + static_cast<std::ptrdiff_t>(train_count));

    LabeledCorpus train, test;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
        const bool to_train = corpus.docs[i].label == 1 && train_set.count(i) > 0;
        (to_train ? train : test).docs.push_back(corpus.docs[i]);
    }
    return {std::move(train), std::move(test)};
}

}  // namespace kwclass

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "kwclass/corpusgen.hpp"
#include "kwclass/errors.hpp"
#include "kwclass/tokenize.hpp"

using namespace kwclass;
using testutil::error_message;
using testutil::TempDir;
using testutil::write_file;

namespace {

GenSpec small_spec() {
    GenSpec spec;
    spec.seed = 11;
    spec.n_pos = 6;
    spec.n_neg = 4;
    spec.vocab_pos = {"breach", "contract", "owe"};
    spec.vocab_neg = {"crime", "theft"};
    spec.doc_len_min = 20;
    spec.doc_len_max = 60;
    spec.pos_keyword_rate = 0.4;
    spec.neg_keyword_rate = 0.2;
    return spec;
}

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

TEST_CASE("generate is deterministic for a fixed seed") {
    const auto spec = small_spec();
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a == b);

    auto other = spec;
    other.seed = 12;
    CHECK(generate(other) != a);
}

TEST_CASE("generate produces the requested mix, ordered by id") {
    const auto corpus = generate(small_spec());
    CHECK(corpus.size() == 10);
    CHECK(corpus.count_label(1) == 6);
    CHECK(corpus.count_label(0) == 4);

    std::set<std::string> ids;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
        ids.insert(corpus.docs[i].id);
        if (i > 0) CHECK(corpus.docs[i - 1].id < corpus.docs[i].id);
    }
    CHECK(ids.size() == corpus.size());
}

TEST_CASE("generated token streams survive normalization unchanged") {
    const auto corpus = generate(small_spec());
    for (const auto& doc : corpus.docs) {
        const auto raw = split_ws(doc.text);
        CHECK(raw.size() >= 20);
        CHECK(raw.size() <= 60);
        CHECK(normalize(doc.text) == raw);
    }
}

TEST_CASE("keyword rate boundaries") {
    auto spec = small_spec();
    spec.pos_keyword_rate = 1.0;
    spec.neg_keyword_rate = 0.0;
    const auto corpus = generate(spec);

    const std::set<std::string> pos_pool(spec.vocab_pos.begin(), spec.vocab_pos.end());
    const std::set<std::string> neg_pool(spec.vocab_neg.begin(), spec.vocab_neg.end());
    for (const auto& doc : corpus.docs) {
        for (const auto& tok : split_ws(doc.text)) {
            if (doc.label == 1) {
                CHECK(pos_pool.count(tok) == 1);
            } else {
                CHECK(neg_pool.count(tok) == 0);
            }
        }
    }
}

TEST_CASE("empirical keyword rate approaches the configured rate") {
    auto spec = small_spec();
    spec.n_pos = 40;
    spec.n_neg = 1;
    spec.doc_len_min = 1000;
    spec.doc_len_max = 2000;
    spec.pos_keyword_rate = 0.3;
    const auto corpus = generate(spec);

    const std::set<std::string> pool(spec.vocab_pos.begin(), spec.vocab_pos.end());
    std::uint64_t total = 0, hits = 0;
    for (const auto& doc : corpus.docs) {
        if (doc.label != 1) continue;
        for (const auto& tok : split_ws(doc.text)) {
            ++total;
            if (pool.count(tok) > 0) ++hits;
        }
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(total);
    const double stderr3 =
        3.0 * std::sqrt(0.3 * 0.7 / static_cast<double>(total));
    CHECK(std::abs(rate - 0.3) <= stderr3);
}

TEST_CASE("generate rejects invalid specs by field name") {
    auto len = small_spec();
    len.doc_len_min = 70;
    CHECK(error_message<std::invalid_argument>([&] { generate(len); }).find("doc_len_range") !=
          std::string::npos);

    auto rate = small_spec();
    rate.pos_keyword_rate = 1.2;
    CHECK(error_message<std::invalid_argument>([&] { generate(rate); })
              .find("pos_keyword_rate") != std::string::npos);

    auto empty = small_spec();
    empty.vocab_neg.clear();
    CHECK(error_message<std::invalid_argument>([&] { generate(empty); }).find("vocab_neg") !=
          std::string::npos);

    auto unnormalized = small_spec();
    unnormalized.vocab_pos.push_back("Two Words");
    CHECK(error_message<std::invalid_argument>([&] { generate(unnormalized); })
              .find("vocab_pos") != std::string::npos);

    auto collision = small_spec();
    collision.vocab_pos.push_back(std::string(filler_words().front()));
    CHECK(error_message<std::invalid_argument>([&] { generate(collision); })
              .find("filler") != std::string::npos);

    auto duplicate = small_spec();
    duplicate.vocab_pos.push_back("breach");
    CHECK(error_message<std::invalid_argument>([&] { generate(duplicate); })
              .find("duplicate") != std::string::npos);
}

TEST_CASE("the filler vocabulary is fixed, normalized and deduplicated") {
    const auto words = filler_words();
    CHECK(words.size() == 1000);
    std::set<std::string_view> seen;
    for (const auto w : words) {
        CHECK(normalize(w) == std::vector<std::string>{std::string(w)});
        seen.insert(w);
    }
    CHECK(seen.size() == words.size());
}

TEST_CASE("write_corpus round-trips through load_corpus") {
    TempDir tmp;
    const auto corpus = generate(small_spec());
    write_corpus(corpus, tmp.path() / "corpus");
    CHECK(load_corpus(tmp.path() / "corpus") == corpus);
}

TEST_CASE("load_gen_spec reads the JSON schema") {
    TempDir tmp;
    const auto path = tmp.path() / "spec.json";
    write_file(path, R"({
      "seed": 11,
      "n_pos": 6,
      "n_neg": 4,
      "vocab_pos": ["breach", "contract", "owe"],
      "vocab_neg": ["crime", "theft"],
      "doc_len_range": [20, 60],
      "pos_keyword_rate": 0.4,
      "neg_keyword_rate": 0.2
    })");
    const auto spec = load_gen_spec(path);
    CHECK(generate(spec) == generate(small_spec()));

    SUBCASE("missing field is named") {
        write_file(path, R"({"seed": 1})");
        const auto msg = error_message<std::runtime_error>([&] { load_gen_spec(path); });
        CHECK(msg.find("n_pos") != std::string::npos);
    }
    SUBCASE("bad doc_len_range") {
        write_file(path, R"({
          "seed": 1, "n_pos": 1, "n_neg": 1,
          "vocab_pos": ["a"], "vocab_neg": ["b"],
          "doc_len_range": [20], "pos_keyword_rate": 0.4, "neg_keyword_rate": 0.2
        })");
        const auto msg = error_message<std::runtime_error>([&] { load_gen_spec(path); });
        CHECK(msg.find("doc_len_range") != std::string::npos);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_gen_spec(tmp.path() / "nope.json"), FileNotFoundError);
    }
}

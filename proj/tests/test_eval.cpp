#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "kwclass/eval.hpp"

using namespace kwclass;
using testutil::TempDir;

namespace {

// Decisions/labels realizing a given confusion matrix.
std::pair<std::vector<Decision>, std::vector<int>> realize(const ConfusionMatrix& cm) {
    std::vector<Decision> decisions;
    std::vector<int> labels;
    auto add = [&](std::uint64_t n, int predicted, int actual) {
        for (std::uint64_t i = 0; i < n; ++i) {
            decisions.push_back({predicted == 1 ? 0.9 : 0.1, predicted, 0.5});
            labels.push_back(actual);
        }
    };
    add(cm.tp, 1, 1);
    add(cm.fn, 0, 1);
    add(cm.fp, 1, 0);
    add(cm.tn, 0, 0);
    return {decisions, labels};
}

int pct2(double v) { return static_cast<int>(std::llround(v * 100.0)); }

ModelVector make_model(std::vector<std::string> keywords, std::vector<std::uint64_t> counts) {
    ModelVector m;
    m.k = keywords.size();
    m.keywords = std::move(keywords);
    m.counts = std::move(counts);
    return m;
}

}  // namespace

TEST_CASE("confusion counts the four cells") {
    const std::vector<Decision> decisions{{0.9, 1, 0.5}, {0.8, 1, 0.5}, {0.1, 0, 0.5},
                                          {0.2, 0, 0.5}};
    const std::vector<int> labels{1, 1, 0, 0};
    const auto cm = confusion(decisions, labels);
    CHECK(cm == ConfusionMatrix{2, 0, 0, 2});
    CHECK(cm.total() == 4);
}

TEST_CASE("confusion rejects mismatched or empty inputs") {
    const std::vector<Decision> one{{0.9, 1, 0.5}};
    const std::vector<int> two{1, 0};
    CHECK_THROWS_AS(confusion(one, two), std::invalid_argument);
    CHECK_THROWS_AS(confusion({}, {}), std::invalid_argument);
}

TEST_CASE("metrics reproduces the published confusion arithmetic") {
    SUBCASE("threshold 0.60 matrix") {
        const ConfusionMatrix cm{46, 4, 2, 48};
        const auto [decisions, labels] = realize(cm);
        CHECK(confusion(decisions, labels) == cm);

        const auto row = metrics(cm, 0.6);
        CHECK(pct2(row.precision) == 96);
        CHECK(pct2(row.recall) == 92);
        CHECK(pct2(row.f1) == 94);
        CHECK(row.accuracy_pct == 94.0);
        CHECK(row.positive_recall_pct == 92.0);
    }
    SUBCASE("threshold 0.65 matrix") {
        const ConfusionMatrix cm{39, 11, 1, 49};
        const auto [decisions, labels] = realize(cm);
        CHECK(confusion(decisions, labels) == cm);

        const auto row = metrics(cm, 0.65);
        CHECK(pct2(row.precision) == 98);
        CHECK(pct2(row.recall) == 78);
        CHECK(pct2(row.f1) == 87);
        CHECK(row.accuracy_pct == 88.0);
        CHECK(row.positive_recall_pct == 78.0);
    }
}

TEST_CASE("metrics zero-denominator conventions") {
    const auto row = metrics(ConfusionMatrix{0, 0, 0, 10}, 0.6);
    CHECK(row.precision == 0.0);
    CHECK(row.recall == 0.0);
    CHECK(row.f1 == 0.0);
    CHECK(row.accuracy_pct == 100.0);
    CHECK(row.positive_recall_pct == 0.0);

    CHECK_THROWS_AS(metrics(ConfusionMatrix{}, 0.6), std::invalid_argument);
}

TEST_CASE("metrics identities on random matrices") {
    std::mt19937_64 rng(4321);
    for (int iter = 0; iter < 500; ++iter) {
        const ConfusionMatrix cm{rng() % 100, rng() % 100, rng() % 100, rng() % 100};
        if (cm.total() == 0) continue;
        const auto row = metrics(cm, 0.5);

        CHECK(row.accuracy_pct ==
              100.0 * static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total()));
        CHECK(row.positive_recall_pct == 100.0 * row.recall);
        if (row.precision + row.recall > 0.0) {
            CHECK(std::abs(row.f1 * (row.precision + row.recall) -
                           2.0 * row.precision * row.recall) < 1e-12);
        } else {
            CHECK(row.f1 == 0.0);
        }
    }
}

TEST_CASE("sweep equals the unbatched classify/confusion/metrics path") {
    std::mt19937_64 rng(9876);
    const auto model = make_model({"breach", "owe", "rent"}, {7, 4, 2});
    const std::vector<std::string> vocab{"breach", "owe", "rent", "blue", "tree", "walk"};

    LabeledCorpus corpus;
    for (int d = 0; d < 30; ++d) {
        std::string text;
        const int len = 5 + static_cast<int>(rng() % 40);
        for (int i = 0; i < len; ++i) {
            text += vocab[rng() % vocab.size()];
            text += ' ';
        }
        corpus.docs.push_back({"doc" + std::to_string(d), text, static_cast<int>(rng() % 2)});
    }

    const std::vector<double> thresholds{0.1, 0.35, 0.6, 0.8, 0.95};
    const auto rows = sweep(model, corpus, thresholds);
    REQUIRE(rows.size() == thresholds.size());

    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        std::vector<Decision> decisions;
        std::vector<int> labels;
        for (const auto& doc : corpus.docs) {
            decisions.push_back(classify(model, doc, thresholds[i]));
            labels.push_back(*doc.label);
        }
        const auto expect = metrics(confusion(decisions, labels), thresholds[i]);
        CHECK(rows[i] == expect);
    }

    SUBCASE("tp and fp are non-increasing across the sweep") {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].cm.tp <= rows[i - 1].cm.tp);
            CHECK(rows[i].cm.fp <= rows[i - 1].cm.fp);
        }
    }
}

TEST_CASE("sweep validates its inputs") {
    const auto model = make_model({"breach"}, {3});
    LabeledCorpus corpus;
    corpus.docs.push_back({"d", "breach", 1});

    const std::vector<double> decreasing{0.6, 0.5};
    CHECK_THROWS_AS(sweep(model, corpus, decreasing), std::invalid_argument);
    const std::vector<double> repeated{0.6, 0.6};
    CHECK_THROWS_AS(sweep(model, corpus, repeated), std::invalid_argument);
    const std::vector<double> outside{0.6, 1.5};
    CHECK_THROWS_AS(sweep(model, corpus, outside), std::invalid_argument);
    const std::vector<double> fine{0.6};
    CHECK_THROWS_AS(sweep(model, LabeledCorpus{}, fine), std::invalid_argument);
}

TEST_CASE("report CSV format is pinned") {
    const auto row = metrics(ConfusionMatrix{46, 4, 2, 48}, 0.6);
    const auto csv = report_csv(std::vector<MetricsRow>{row});
    CHECK(csv ==
          "threshold,tp,fn,fp,tn,precision,recall,f1,accuracy_pct,positive_recall_pct\n"
          "0.600000,46,4,2,48,0.958333,0.920000,0.938776,94.000000,92.000000\n");
}

TEST_CASE("report golden files stay byte-exact") {
    const std::vector<MetricsRow> rows{metrics(ConfusionMatrix{46, 4, 2, 48}, 0.6),
                                       metrics(ConfusionMatrix{39, 11, 1, 49}, 0.65)};
    const std::string dir = KWCLASS_GOLDEN_DIR;
    CHECK(report_csv(rows) == testutil::read_file(dir + "/metrics_fixture.csv"));
    CHECK(report_json(rows) == testutil::read_file(dir + "/metrics_fixture.json"));
}

TEST_CASE("emitted JSON parses back to equal rows") {
    std::mt19937_64 rng(1357);
    std::vector<MetricsRow> rows;
    double t = 0.05;
    for (int i = 0; i < 6; ++i) {
        const ConfusionMatrix cm{rng() % 50, rng() % 50, rng() % 50, 1 + rng() % 50};
        rows.push_back(metrics(cm, t));
        t += 0.13;
    }

    const auto parsed = nlohmann::json::parse(report_json(rows));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        MetricsRow row;
        row.threshold = parsed[i]["threshold"].get<double>();
        row.cm = ConfusionMatrix{parsed[i]["tp"].get<std::uint64_t>(),
                                 parsed[i]["fn"].get<std::uint64_t>(),
                                 parsed[i]["fp"].get<std::uint64_t>(),
                                 parsed[i]["tn"].get<std::uint64_t>()};
        row.precision = parsed[i]["precision"].get<double>();
        row.recall = parsed[i]["recall"].get<double>();
        row.f1 = parsed[i]["f1"].get<double>();
        row.accuracy_pct = parsed[i]["accuracy_pct"].get<double>();
        row.positive_recall_pct = parsed[i]["positive_recall_pct"].get<double>();
        CHECK(row == rows[i]);
    }
}

TEST_CASE("emit_report writes files and validates inputs") {
    TempDir tmp;
    const std::vector<MetricsRow> rows{metrics(ConfusionMatrix{1, 2, 3, 4}, 0.5)};

    emit_report(rows, tmp.path() / "r.csv", ReportFormat::csv);
    CHECK(testutil::read_file(tmp.path() / "r.csv") == report_csv(rows));
    emit_report(rows, tmp.path() / "r.json", ReportFormat::json);
    CHECK(testutil::read_file(tmp.path() / "r.json") == report_json(rows));

    CHECK_THROWS_AS(emit_report({}, tmp.path() / "x.csv", ReportFormat::csv),
                    std::invalid_argument);
    CHECK_THROWS_AS(emit_report(rows, tmp.path() / "no/such/dir/r.csv", ReportFormat::csv),
                    std::runtime_error);
}

TEST_CASE("parse_report_format") {
    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
}

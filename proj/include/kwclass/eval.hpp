#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwclass/classify.hpp"
#include "kwclass/corpus.hpp"
#include "kwclass/vocab.hpp"

namespace kwclass {

// Binary confusion counts with label 1 as the positive class.
struct ConfusionMatrix {
    std::uint64_t tp = 0;  // predicted 1, actual 1
    std::uint64_t fn = 0;  // predicted 0, actual 1
    std::uint64_t fp = 0;  // predicted 1, actual 0
    std::uint64_t tn = 0;  // predicted 0, actual 0

    std::uint64_t total() const { return tp + fn + fp + tn; }

    bool operator==(const ConfusionMatrix&) const = default;
};

// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 = 2PR/(P+R), each 0 when
// its denominator is 0. accuracy_pct = 100*(tp+tn)/total.
// positive_recall_pct is 100*recall: the share of true positives recovered,
// reported separately because on a positive-only test set it is the number
// an "accuracy" column actually shows.
struct MetricsRow {
    double threshold = 0.0;
    ConfusionMatrix cm;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double accuracy_pct = 0.0;
    double positive_recall_pct = 0.0;

    bool operator==(const MetricsRow&) const = default;
};

enum class ReportFormat { csv, json };

// Accepts "csv" or "json".
ReportFormat parse_report_format(std::string_view name);

ConfusionMatrix confusion(std::span<const Decision> decisions, std::span<const int> labels);

MetricsRow metrics(const ConfusionMatrix& cm, double threshold);

// Evaluates the model over test at every threshold. Each document is scored
// once and the cached similarity reused, so the rows match a per-threshold
// classify() exactly. Thresholds must be strictly increasing, each in [0,1].
std::vector<MetricsRow> sweep(const ModelVector& model, const LabeledCorpus& test,
                              std::span<const double> thresholds,
                              MatchMode mode = MatchMode::exact);

// One row per MetricsRow with `sep` between fields: threshold, tp, fn, fp,
// tn, precision, recall, f1, accuracy_pct, positive_recall_pct. Reals are
// rendered with 6 decimal digits.
std::string format_metrics_row(const MetricsRow& row, char sep);

inline constexpr std::string_view kReportCsvHeader =
    "threshold,tp,fn,fp,tn,precision,recall,f1,accuracy_pct,positive_recall_pct";

std::string report_csv(std::span<const MetricsRow> rows);

// JSON list of row objects with the CSV column names as fields, reals at
// full precision.
std::string report_json(std::span<const MetricsRow> rows);

void emit_report(std::span<const MetricsRow> rows, const std::filesystem::path& path,
                 ReportFormat format);

}  // namespace kwclass

#include "kwclass/eval.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace kwclass {

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format '" + std::string(name) +
                                "' (expected csv or json)");
}

ConfusionMatrix confusion(std::span<const Decision> decisions, std::span<const int> labels) {
    if (decisions.size() != labels.size() || decisions.empty()) {
        throw std::invalid_argument("confusion: decisions and labels must have equal nonzero "
                                    "length (" +
                                    std::to_string(decisions.size()) + " vs " +
                                    std::to_string(labels.size()) + ")");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        if (labels[i] == 1) {
            decisions[i].label == 1 ? ++cm.tp : ++cm.fn;
        } else {
            decisions[i].label == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

MetricsRow metrics(const ConfusionMatrix& cm, double threshold) {
    if (cm.total() == 0) throw std::invalid_argument("metrics: empty confusion matrix");

    MetricsRow row;
    row.threshold = threshold;
    row.cm = cm;
    const auto tp = static_cast<double>(cm.tp);
    if (cm.tp + cm.fp > 0) row.precision = tp / static_cast<double>(cm.tp + cm.fp);
    if (cm.tp + cm.fn > 0) row.recall = tp / static_cast<double>(cm.tp + cm.fn);
    if (row.precision + row.recall > 0.0) {
        row.f1 = 2.0 * row.precision * row.recall / (row.precision + row.recall);
    }
    row.accuracy_pct =
        100.0 * static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    row.positive_recall_pct = 100.0 * row.recall;
    return row;
}

std::vector<MetricsRow> sweep(const ModelVector& model, const LabeledCorpus& test,
                              std::span<const double> thresholds, MatchMode mode) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (!(thresholds[i] >= 0.0 && thresholds[i] <= 1.0)) {
            throw std::invalid_argument("sweep: threshold " + std::to_string(thresholds[i]) +
                                        " out of [0, 1]");
        }
        if (i > 0 && !(thresholds[i] > thresholds[i - 1])) {
            throw std::invalid_argument("sweep: thresholds must be strictly increasing");
        }
    }
    if (test.docs.empty()) throw std::invalid_argument("sweep: empty test corpus");

    // Similarities are threshold-independent; score each document once.
    std::vector<double> sims;
    std::vector<int> labels;
    sims.reserve(test.docs.size());
    labels.reserve(test.docs.size());
    for (const auto& doc : test.docs) {
        const DocVector dv = doc_vector(model, doc, mode);
        sims.push_back(cosine_similarity(std::span<const std::uint64_t>(model.counts),
                                         std::span<const std::uint64_t>(dv.counts)));
        labels.push_back(doc.label.value_or(0));
    }

    std::vector<MetricsRow> rows;
    rows.reserve(thresholds.size());
    for (const double t : thresholds) {
        std::vector<Decision> decisions;
        decisions.reserve(sims.size());
        for (const double s : sims) decisions.push_back({s, s >= t ? 1 : 0, t});
        rows.push_back(metrics(confusion(decisions, labels), t));
    }
    return rows;
}

std::string format_metrics_row(const MetricsRow& row, char sep) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%.6f%c%llu%c%llu%c%llu%c%llu%c%.6f%c%.6f%c%.6f%c%.6f%c%.6f",
                  row.threshold, sep, static_cast<unsigned long long>(row.cm.tp), sep,
                  static_cast<unsigned long long>(row.cm.fn), sep,
                  static_cast<unsigned long long>(row.cm.fp), sep,
                  static_cast<unsigned long long>(row.cm.tn), sep, row.precision, sep, row.recall,
                  sep, row.f1, sep, row.accuracy_pct, sep, row.positive_recall_pct);
    return buf;
}

std::string report_csv(std::span<const MetricsRow> rows) {
    std::string out{kReportCsvHeader};
    out.push_back('\n');
    for (const auto& row : rows) {
        out += format_metrics_row(row, ',');
        out.push_back('\n');
    }
    return out;
}

std::string report_json(std::span<const MetricsRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        arr.push_back({{"threshold", row.threshold},
                       {"tp", row.cm.tp},
                       {"fn", row.cm.fn},
                       {"fp", row.cm.fp},
                       {"tn", row.cm.tn},
                       {"precision", row.precision},
                       {"recall", row.recall},
                       {"f1", row.f1},
                       {"accuracy_pct", row.accuracy_pct},
                       {"positive_recall_pct", row.positive_recall_pct}});
    }
    return arr.dump(2) + "\n";
}

void emit_report(std::span<const MetricsRow> rows, const std::filesystem::path& path,
                 ReportFormat format) {
    if (rows.empty()) throw std::invalid_argument("emit_report: no rows");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path.string());
    out << (format == ReportFormat::csv ? report_csv(rows) : report_json(rows));
    if (!out) throw std::runtime_error("cannot write: " + path.string());
}

}  // namespace kwclass

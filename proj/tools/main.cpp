#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kwclass/classify.hpp"
#include "kwclass/config.hpp"
#include "kwclass/corpus.hpp"
#include "kwclass/corpusgen.hpp"
#include "kwclass/errors.hpp"
#include "kwclass/eval.hpp"
#include "kwclass/tokenize.hpp"
#include "kwclass/vocab.hpp"

namespace fs = std::filesystem;
using namespace kwclass;

namespace {

// Raw command-line values shared by the subcommands; only one subcommand
// parses per run.
struct Cli {
    std::string config;
    std::string corpus, candidates, model, report;
    std::string match_mode, format = "csv", thresholds = "0.6:0.9:0.05";
    int k = 20;
    double threshold = 0.6;
    std::uint64_t seed = 0;
    std::string doc_path, spec_path, out_root;
};

bool given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

// Flag beats config file beats default.
RunConfig resolve(const CLI::App* cmd, const Cli& c) {
    RunConfig cfg;
    if (given(cmd, "--config")) cfg = load_run_config(c.config, cfg);
    if (given(cmd, "--corpus")) cfg.corpus = c.corpus;
    if (given(cmd, "--candidates")) cfg.candidates = c.candidates;
    if (given(cmd, "--model")) cfg.model = c.model;
    if (given(cmd, "--report")) cfg.report = c.report;
    if (given(cmd, "--match-mode")) cfg.match_mode = parse_match_mode(c.match_mode);
    if (given(cmd, "--k")) cfg.k = c.k;
    if (given(cmd, "--threshold")) cfg.threshold = c.threshold;
    return cfg;
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) {
        throw std::runtime_error(std::string("missing required option ") + flag);
    }
    return value;
}

std::string read_text_file(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void print_tally(const KeywordTally& tally) {
    KeywordTally sorted = tally;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (const auto& [keyword, count] : sorted) {
        std::printf("%s\t%llu\n", keyword.c_str(), static_cast<unsigned long long>(count));
    }
}

void print_rows(const std::vector<MetricsRow>& rows) {
    std::cerr << "threshold\ttp\tfn\tfp\ttn\tprecision\trecall\tf1\taccuracy_pct\t"
                 "positive_recall_pct\n";
    for (const auto& row : rows) {
        std::printf("%s\n", format_metrics_row(row, '\t').c_str());
    }
}

void maybe_emit_report(const std::vector<MetricsRow>& rows, const RunConfig& cfg,
                       const std::string& format) {
    if (cfg.report.empty()) return;
    emit_report(rows, cfg.report, parse_report_format(format));
    std::cerr << "wrote report to " << cfg.report << "\n";
}

int run_candidates(const CLI::App* cmd, const Cli& c) {
    const RunConfig cfg = resolve(cmd, c);
    const auto corpus = load_corpus(require(cfg.corpus, "--corpus"));
    const auto candidates = load_candidates(require(cfg.candidates, "--candidates"));
    print_tally(tally_candidates(candidates, corpus, cfg.match_mode));
    return 0;
}

int run_build(const CLI::App* cmd, const Cli& c) {
    const RunConfig cfg = resolve(cmd, c);
    if (cfg.k < 1) throw std::runtime_error("--k must be >= 1");
    const auto corpus = load_corpus(require(cfg.corpus, "--corpus"));
    const auto candidates = load_candidates(require(cfg.candidates, "--candidates"));
    const auto tally = tally_candidates(candidates, corpus, cfg.match_mode);

    ModelMetadata meta;
    meta.train_docs = corpus.count_label(1);
    meta.candidates_file = cfg.candidates;
    meta.built_at = current_timestamp();
    const auto model = select_top_k(tally, static_cast<std::size_t>(cfg.k), meta);

    save_model(model, require(cfg.model, "--model"));
    for (std::size_t i = 0; i < model.keywords.size(); ++i) {
        std::printf("%s\t%llu\n", model.keywords[i].c_str(),
                    static_cast<unsigned long long>(model.counts[i]));
    }
    std::cerr << "wrote model (k=" << model.k << ", " << meta.train_docs
              << " training docs) to " << cfg.model << "\n";
    return 0;
}

int run_classify(const CLI::App* cmd, const Cli& c) {
    const RunConfig cfg = resolve(cmd, c);
    const auto model = load_model(require(cfg.model, "--model"));
    const Document doc{c.doc_path, read_text_file(c.doc_path), std::nullopt};
    const Decision d = classify(model, doc, cfg.threshold, cfg.match_mode);
    std::printf("%s\t%.6f\t%d\n", doc.id.c_str(), d.similarity, d.label);
    return 0;
}

int run_evaluate(const CLI::App* cmd, const Cli& c) {
    const RunConfig cfg = resolve(cmd, c);
    const auto model = load_model(require(cfg.model, "--model"));
    const auto corpus = load_corpus(require(cfg.corpus, "--corpus"));
    const double t = cfg.threshold;
    const auto rows = sweep(model, corpus, std::span<const double>(&t, 1), cfg.match_mode);
    print_rows(rows);
    maybe_emit_report(rows, cfg, c.format);
    return 0;
}

int run_sweep(const CLI::App* cmd, const Cli& c) {
    const RunConfig cfg = resolve(cmd, c);
    const auto model = load_model(require(cfg.model, "--model"));
    const auto corpus = load_corpus(require(cfg.corpus, "--corpus"));
    const auto grid = parse_threshold_grid(c.thresholds);
    const auto rows = sweep(model, corpus, grid, cfg.match_mode);
    print_rows(rows);
    maybe_emit_report(rows, cfg, c.format);
    return 0;
}

int run_gen(const CLI::App* cmd, const Cli& c) {
    GenSpec spec = load_gen_spec(c.spec_path);
    if (given(cmd, "--seed")) spec.seed = c.seed;
    const auto corpus = generate(spec);
    write_corpus(corpus, c.out_root);
    std::cerr << "wrote " << corpus.size() << " documents under " << c.out_root << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"keyword-frequency document classifier"};
    app.require_subcommand(1);
    Cli c;

    auto add_common = [&c](CLI::App* cmd, bool corpus, bool candidates, bool model) {
        if (corpus) cmd->add_option("--corpus", c.corpus, "corpus root directory");
        if (candidates) cmd->add_option("--candidates", c.candidates, "candidate keyword file");
        if (model) cmd->add_option("--model", c.model, "model file");
        cmd->add_option("--match-mode", c.match_mode, "keyword matching: exact|prefix");
        cmd->add_option("--config", c.config, "JSON config file");
    };

    auto* cand = app.add_subcommand("candidates",
                                    "print the full candidate tally over a training corpus");
    add_common(cand, true, true, false);

    auto* build = app.add_subcommand("build", "build and save a model from candidate tallies");
    add_common(build, true, true, true);
    build->add_option("--k", c.k, "number of keywords to keep");

    auto* cls = app.add_subcommand("classify", "classify a single document");
    cls->add_option("doc", c.doc_path, "document file")->required();
    add_common(cls, false, false, true);
    cls->add_option("--threshold", c.threshold, "decision threshold");

    auto* eval = app.add_subcommand("evaluate", "evaluate a model on a labeled corpus");
    add_common(eval, true, false, true);
    eval->add_option("--threshold", c.threshold, "decision threshold");
    eval->add_option("--report", c.report, "report output file");
    eval->add_option("--format", c.format, "report format: csv|json");

    auto* swp = app.add_subcommand("sweep", "evaluate a model over a threshold grid");
    add_common(swp, true, false, true);
    swp->add_option("--thresholds", c.thresholds, "grid START:STOP:STEP or single value");
    swp->add_option("--report", c.report, "report output file");
    swp->add_option("--format", c.format, "report format: csv|json");

    auto* gen = app.add_subcommand("gen", "generate a synthetic labeled corpus");
    gen->add_option("spec", c.spec_path, "generator spec (JSON)")->required();
    gen->add_option("out", c.out_root, "output corpus root")->required();
    gen->add_option("--seed", c.seed, "override the spec's seed");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(cand)) return run_candidates(cand, c);
        if (app.got_subcommand(build)) return run_build(build, c);
        if (app.got_subcommand(cls)) return run_classify(cls, c);
        if (app.got_subcommand(eval)) return run_evaluate(eval, c);
        if (app.got_subcommand(swp)) return run_sweep(swp, c);
        if (app.got_subcommand(gen)) return run_gen(gen, c);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const FileNotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientVocabularyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ModelValidationError& e) {
        std::cerr << "error: invalid model: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

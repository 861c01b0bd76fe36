#include "kwclass/config.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "kwclass/errors.hpp"

namespace fs = std::filesystem;

namespace kwclass {

namespace {

double parse_real(const std::string& text) {
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid threshold '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("invalid threshold '" + text + "'");
    return value;
}

}  // namespace

RunConfig load_run_config(const fs::path& path, const RunConfig& defaults) {
    if (!fs::exists(path)) throw FileNotFoundError(path.string());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read: " + path.string());

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw std::runtime_error("config file is not a JSON object");

    RunConfig cfg = defaults;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "k") {
                cfg.k = value.get<int>();
            } else if (key == "threshold") {
                cfg.threshold = value.get<double>();
            } else if (key == "match_mode") {
                cfg.match_mode = parse_match_mode(value.get<std::string>());
            } else if (key == "corpus") {
                cfg.corpus = value.get<std::string>();
            } else if (key == "candidates") {
                cfg.candidates = value.get<std::string>();
            } else if (key == "model") {
                cfg.model = value.get<std::string>();
            } else if (key == "report") {
                cfg.report = value.get<std::string>();
            } else {
                throw std::runtime_error("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed config file: " + std::string(e.what()));
    }
    return cfg;
}

std::vector<double> parse_threshold_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(begin, i - begin));
            begin = i + 1;
        }
    }

    std::vector<double> grid;
    if (parts.size() == 1) {
        grid.push_back(parse_real(parts[0]));
    } else if (parts.size() == 3) {
        const double start = parse_real(parts[0]);
        const double stop = parse_real(parts[1]);
        const double step = parse_real(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("threshold grid step must be > 0");
        if (start > stop + 1e-9) {
            throw std::invalid_argument("threshold grid start exceeds stop");
        }
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
        for (std::size_t i = 0; i <= n; ++i) {
            grid.push_back(start + static_cast<double>(i) * step);
        }
    } else {
        throw std::invalid_argument("invalid threshold grid '" + text +
                                    "' (expected T or START:STOP:STEP)");
    }

    for (const double t : grid) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("threshold " + std::to_string(t) + " out of [0, 1]");
        }
    }
    return grid;
}

}  // namespace kwclass

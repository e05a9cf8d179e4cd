#include "paprlab/output.hpp"

#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#ifndef PAPRLAB_VERSION
#define PAPRLAB_VERSION "0.0.0"
#endif

namespace paprlab::cli {

namespace {

using nlohmann::json;

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

json to_json(const SimConfig& c) {
    return json{
        {"n_subcarriers", c.n_subcarriers},
        {"oversample", c.oversample},
        {"n_frames", c.n_frames},
        {"scheme", std::string(scheme_name(c.scheme))},
        {"slm_u", c.slm_u},
        {"isis_k", c.isis_k},
        {"seed", c.seed},
        {"threshold_grid", c.threshold_grid},
    };
}

SimConfig from_json(const json& j) {
    SimConfig c;
    c.n_subcarriers = j.at("n_subcarriers").get<std::size_t>();
    c.oversample = j.at("oversample").get<std::size_t>();
    c.n_frames = j.at("n_frames").get<std::size_t>();
    c.scheme = parse_scheme(j.at("scheme").get<std::string>());
    c.slm_u = j.at("slm_u").get<std::size_t>();
    c.isis_k = j.at("isis_k").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threshold_grid = j.at("threshold_grid").get<std::vector<double>>();
    return c;
}

}  // namespace

const char* tool_version() noexcept { return PAPRLAB_VERSION; }

std::vector<std::string> column_names(const std::vector<ExperimentResult>& results) {
    std::set<std::size_t> sizes;
    for (const auto& r : results) sizes.insert(r.config.n_subcarriers);
    const bool with_n = sizes.size() > 1;
    std::vector<std::string> names;
    for (const auto& r : results) names.push_back("ccdf_" + scheme_label(r.config, with_n));
    return names;
}

void write_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
    if (results.empty()) throw std::invalid_argument("write_csv: nothing to write");
    const auto& grid = results.front().curve.thresholds_db;
    for (const auto& r : results) {
        if (r.curve.thresholds_db != grid) throw std::invalid_argument("write_csv: runs use different threshold grids");
    }
    out << "threshold_db";
    for (const auto& name : column_names(results)) out << ',' << name;
    out << '\n';
    for (std::size_t t = 0; t < grid.size(); ++t) {
        out << format_g9(grid[t]);
        for (const auto& r : results) out << ',' << format_g9(r.curve.prob[t]);
        out << '\n';
    }
}

std::string config_to_json(const SimConfig& config) { return to_json(config).dump(); }

SimConfig config_from_json(const std::string& text) { return from_json(json::parse(text)); }

std::string metadata_json(const std::vector<ExperimentResult>& results, const RunInfo& info) {
    const auto names = column_names(results);
    json runs = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        runs.push_back(json{
            {"column", names[i]},
            {"label", r.curve.label},
            {"config", to_json(r.config)},
            {"side_info_bits", r.side_info_bits},
            {"candidates_evaluated", r.candidates_evaluated},
        });
    }
    json doc{
        {"tool", "paprlab"},
        {"version", tool_version()},
        {"command", info.command},
        {"wall_time_s", info.wall_time_s},
        {"threads", info.threads},
        {"runs", runs},
    };
    return doc.dump(2) + "\n";
}

std::vector<SimConfig> configs_from_metadata(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<SimConfig> out;
    for (const auto& run : doc.at("runs")) out.push_back(from_json(run.at("config")));
    return out;
}

}  // namespace paprlab::cli

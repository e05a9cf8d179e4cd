#include "paprlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paprlab/output.hpp"
#include "paprlab/presets.hpp"

namespace paprlab::cli {

namespace {

struct GridFlags {
    double min_db = 0.0;
    double max_db = 12.0;
    double step_db = 0.1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid-min", min_db, "Lowest CCDF threshold in dB")->capture_default_str();
        cmd->add_option("--grid-max", max_db, "Highest CCDF threshold in dB")->capture_default_str();
        cmd->add_option("--grid-step", step_db, "Threshold spacing in dB")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
};

struct OutputFlags {
    std::string out_path;
    std::string meta_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
        cmd->add_option("--meta-out", meta_path, "JSON metadata output path");
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Flat key=value lines become "--key value" pairs. Blank lines and '#' comments are skipped.
std::vector<std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty() || key == "config") {
            throw UsageError(path + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
        }
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

// Splice the contents of `--config FILE` in ahead of the other run flags, so that
// flags given on the command line are seen later and win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    if (args.empty() || args.front() != "run") return args;
    std::vector<std::string> from_files;
    for (auto it = args.begin() + 1; it != args.end();) {
        std::string path;
        if (*it == "--config") {
            if (it + 1 == args.end()) throw UsageError("--config requires a file path");
            path = *(it + 1);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
            continue;
        }
        const auto file_args = read_config_file(path);
        from_files.insert(from_files.end(), file_args.begin(), file_args.end());
    }
    args.insert(args.begin() + 1, from_files.begin(), from_files.end());
    return args;
}

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file) throw UsageError("cannot open '" + path + "' for writing");
    return file;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"PAPR reduction simulator: baseline OFDM, SLM and ISIS CCDF experiments", "paprlab"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    SimConfig custom;
    std::string scheme_text = "baseline";
    GridFlags grid;
    OutputFlags outputs;
    std::uint64_t preset_seed = kDefaultSeed;
    std::optional<std::size_t> preset_frames;

    auto* run_cmd = app.add_subcommand("run", "Run one custom experiment");
    std::string config_path;
    run_cmd->add_option("--config", config_path,
                        "Flat key=value file using the long flag names; command-line flags take precedence");
    run_cmd->add_option("--scheme", scheme_text, "baseline | slm-walsh | slm-golay | isis-exhaustive | isis-sampled")
        ->capture_default_str();
    run_cmd->add_option("--n", custom.n_subcarriers, "Number of subcarriers N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run_cmd->add_option("--oversample", custom.oversample, "Oversampling factor L")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run_cmd->add_option("--frames", custom.n_frames, "Number of frames")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run_cmd->add_option("--seed", custom.seed, "Master seed")->capture_default_str();
    run_cmd->add_option("--slm-u", custom.slm_u, "SLM candidates U (including the identity)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run_cmd->add_option("--isis-k", custom.isis_k, "Sampled ISIS candidates K (including the identity)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    grid.attach(run_cmd);
    outputs.attach(run_cmd);

    std::vector<CLI::App*> preset_cmds;
    for (const char* name : {"fig5", "fig6", "fig7"}) {
        auto* cmd = app.add_subcommand(name, std::string("Run the ") + name + " preset");
        cmd->add_option("--seed", preset_seed, "Master seed")->capture_default_str();
        cmd->add_option("--frames", preset_frames, "Override the preset frame count")->check(CLI::PositiveNumber);
        grid.attach(cmd);
        outputs.attach(cmd);
        preset_cmds.push_back(cmd);
    }

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant smoke suite");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const UsageError& e) {
        err << "paprlab: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (selftest_cmd->parsed()) {
        return run_selftest(out) ? kExitOk : kExitRuntime;
    }

    std::string command;
    std::vector<SimConfig> configs;
    unsigned threads = 0;
    std::unique_ptr<std::ofstream> csv_file;
    std::unique_ptr<std::ofstream> meta_file;
    try {
        threads = threads_from_env();
        const auto thresholds = make_threshold_grid(grid.min_db, grid.max_db, grid.step_db);
        if (run_cmd->parsed()) {
            command = "run";
            custom.scheme = parse_scheme(scheme_text);
            configs.push_back(custom);
        } else {
            for (auto* cmd : preset_cmds) {
                if (!cmd->parsed()) continue;
                command = cmd->get_name();
                configs = command == "fig5"   ? preset_fig5(preset_seed)
                          : command == "fig6" ? preset_fig6(preset_seed)
                                              : preset_fig7(preset_seed);
            }
        }
        for (auto& c : configs) {
            c.threshold_grid = thresholds;
            if (preset_frames) c.n_frames = *preset_frames;
            validate(c);
        }
        if (!outputs.out_path.empty()) csv_file = open_output(outputs.out_path);
        if (!outputs.meta_path.empty()) meta_file = open_output(outputs.meta_path);
    } catch (const std::exception& e) {
        err << "paprlab: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const auto results = run_experiments(configs, RunOptions{threads});
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        std::ostream& csv = csv_file ? *csv_file : out;
        write_csv(csv, results);
        csv.flush();
        if (!csv) throw std::runtime_error("failed to write CSV output");

        if (meta_file) {
            *meta_file << metadata_json(results, RunInfo{command, elapsed.count(), threads});
            meta_file->flush();
            if (!*meta_file) throw std::runtime_error("failed to write metadata output");
        }
    } catch (const std::exception& e) {
        err << "paprlab: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace paprlab::cli

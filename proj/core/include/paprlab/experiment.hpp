#pragma once

/**
 * @file experiment.hpp
 * @brief Seeded Monte-Carlo CCDF experiments.
 *
 * Frame i of a run is generated from derive_seed(seed, streams::frame_bits, i),
 * and the sampled-ISIS candidate ranks for that frame from
 * derive_seed(seed, streams::isis_ranks, i). Frames are scored independently and
 * collected by index, so results do not depend on the worker count.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paprlab/ccdf.hpp"
#include "paprlab/signal.hpp"

namespace paprlab {

enum class Scheme { baseline, slm_walsh, slm_golay, isis_exhaustive, isis_sampled };

std::string_view scheme_name(Scheme s) noexcept;  // "baseline", "slm-walsh", ...
Scheme parse_scheme(std::string_view name);        // throws std::invalid_argument

struct SimConfig {
    std::size_t n_subcarriers = 8;
    std::size_t oversample = 2;
    std::size_t n_frames = 512;
    Scheme scheme = Scheme::baseline;
    std::size_t slm_u = 2;
    std::uint64_t isis_k = 1000;
    std::uint64_t seed = 42;
    std::vector<double> threshold_grid = default_threshold_grid();

    bool operator==(const SimConfig&) const = default;

    /// 0.0 to 12.0 dB in 0.1 dB steps.
    static std::vector<double> default_threshold_grid();
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SimConfig& config);

/// Column label, e.g. "isis_sampled_K100"; with_n appends "_N<n>".
std::string scheme_label(const SimConfig& config, bool with_n = false);

/// Side-information bits per frame for the configured scheme (0 for baseline).
unsigned side_info_bits(const SimConfig& config);

/// QPSK frame of n symbols from 2n bits of the (master_seed, index) stream.
SymbolFrame gen_random_frame(std::size_t n, std::uint64_t master_seed, std::uint64_t index);

struct RunOptions {
    unsigned threads = 1;  // 0 = hardware concurrency
};

struct ExperimentResult {
    SimConfig config;
    CcdfCurve curve;
    std::vector<double> papr_db;         // post-selection PAPR, by frame index
    std::vector<std::uint64_t> side_info;  // per frame; 0 for baseline
    std::uint64_t candidates_evaluated = 0;
    unsigned side_info_bits = 0;
};

/// Validates, then scores every frame of the run.
ExperimentResult run_experiment(const SimConfig& config, RunOptions options = {});

std::vector<ExperimentResult> run_experiments(const std::vector<SimConfig>& configs, RunOptions options = {});

/// Worker count from PAPRLAB_THREADS (unset or 0 -> hardware concurrency).
/// Throws std::invalid_argument on a malformed value.
unsigned threads_from_env();

}  // namespace paprlab

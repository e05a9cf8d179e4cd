#pragma once

// Experiment presets at the reference parameters: QPSK, N=8, L=2 (16-point grid), 512 frames.

#include <cstdint>
#include <vector>

#include "paprlab/experiment.hpp"

namespace paprlab {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// baseline, SLM Walsh U=2, SLM Golay U=2, exhaustive ISIS.
std::vector<SimConfig> preset_fig5(std::uint64_t seed = kDefaultSeed);

/// Sampled ISIS with K = 8, 100, 500, 1000, then exhaustive ISIS.
std::vector<SimConfig> preset_fig6(std::uint64_t seed = kDefaultSeed);

/// Baseline and ISIS at N = 4, 8, 16; exhaustive at 4 and 8, sampled K=1000 at 16.
std::vector<SimConfig> preset_fig7(std::uint64_t seed = kDefaultSeed);

}  // namespace paprlab

#pragma once

// Seed derivation and bounded draws with a platform-independent bit stream.
//
// std::uniform_int_distribution is implementation-defined, so bounded integers
// are drawn here by rejection from the raw mt19937_64 output, which the
// standard pins exactly.

#include <cstdint>
#include <random>

namespace paprlab {

using Engine = std::mt19937_64;

/// One step of the splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent stream seed for (master, stream, index); a pure function of its inputs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

/// Stream identifiers used by the simulation harness.
namespace streams {
inline constexpr std::uint64_t frame_bits = 1;
inline constexpr std::uint64_t isis_ranks = 2;
}  // namespace streams

}  // namespace paprlab

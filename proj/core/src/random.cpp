#include "paprlab/random.hpp"

#include <limits>
#include <stdexcept>

namespace paprlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ stream);
    return splitmix64(s ^ index);
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine();
    } while (v >= limit);
    return v % bound;
}

}  // namespace paprlab

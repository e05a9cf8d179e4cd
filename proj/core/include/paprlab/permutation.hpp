#pragma once

// Lexicographic permutation ranking over the factorial number system.
//
// Rank r of a permutation p of {0..n-1} is its position in the sorted list of
// all n! permutations. Ranks are held in 64 bits, which caps n at 20.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paprlab {

/// Largest n whose n! fits in a 64-bit rank.
inline constexpr std::size_t kMaxRankedLength = 20;

/// n! for n <= kMaxRankedLength. Throws std::invalid_argument otherwise.
std::uint64_t factorial(std::size_t n);

/// ISIS side information: the row index S of the transmitted ordering in the
/// lexicographic permutation table of length n.
struct PermutationRank {
    std::uint64_t rank = 0;
    std::size_t n = 1;

    bool operator==(const PermutationRank&) const = default;
};

/// Bijection on {0..n-1}. Applying it to a frame yields out[i] = in[mapping[i]].
struct Permutation {
    std::vector<std::size_t> mapping;

    std::size_t size() const noexcept { return mapping.size(); }
    bool operator==(const Permutation&) const = default;

    static Permutation identity(std::size_t n);
};

bool is_bijection(std::span<const std::size_t> mapping) noexcept;

/// Lexicographically r-th permutation, O(n^2).
Permutation perm_unrank(PermutationRank r);

/// Inverse of perm_unrank. Throws std::invalid_argument on a non-bijection.
PermutationRank perm_rank(const Permutation& p);

/// q with q[p[i]] = i.
Permutation inverse(const Permutation& p);

/// ceil(log2(n!)), the side-information size of an ISIS rank.
unsigned rank_bits(std::size_t n);

}  // namespace paprlab

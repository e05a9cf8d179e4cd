#pragma once

// SLM phase-rotation banks built from Walsh-Hadamard rows and Golay complementary sequences.

#include <cstddef>
#include <utility>
#include <vector>

#include "paprlab/signal.hpp"

namespace paprlab {

/// Unit-modulus rotation applied element-wise to a frame.
struct PhaseVector {
    std::vector<Complex> rotations;

    std::size_t size() const noexcept { return rotations.size(); }
};

/// Candidate rotations for SLM. vectors[0] is always the all-ones identity.
struct PhaseVectorBank {
    std::vector<PhaseVector> vectors;

    std::size_t size() const noexcept { return vectors.size(); }
    std::size_t length() const noexcept { return vectors.empty() ? 0 : vectors.front().size(); }
};

constexpr bool is_power_of_two(std::size_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

/// Order-n Sylvester-Hadamard matrix, H_{2k} = [[H_k, H_k], [H_k, -H_k]], entries +-1.
std::vector<std::vector<int>> sylvester_hadamard(std::size_t order);

/// Golay complementary pair of length n from a' = a|b, b' = a|(-b), seeded with a = b = [1].
std::pair<std::vector<int>, std::vector<int>> golay_pair(std::size_t length);

/// Natural (Sylvester) row index of the Walsh function with `sequency` sign changes.
std::size_t sequency_to_natural(std::size_t sequency, std::size_t order);

/**
 * The `count` lowest-sequency Walsh functions of length `length`, i.e. rows of the
 * order-`length` Sylvester-Hadamard matrix taken in sequency order.
 *
 * Natural row 1 is (-1)^n, a linear phase that only circularly shifts the time
 * signal by half a symbol and so never changes the PAPR. Sequency order puts it
 * last. Requires both sizes to be powers of two and count <= length.
 */
PhaseVectorBank gen_walsh_hadamard(std::size_t count, std::size_t length);

/// Identity plus the a-branch of the Golay pair of the given length.
PhaseVectorBank gen_golay(std::size_t length);

}  // namespace paprlab

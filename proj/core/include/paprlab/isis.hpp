#pragma once

/**
 * @file isis.hpp
 * @brief Iterative selection of input sequences (ISIS).
 *
 * The transmitter searches reorderings of the subcarrier symbols and sends the
 * ordering with the lowest PAPR. The side information is the lexicographic rank
 * of that ordering in the permutation table of length N. No multiplications are
 * applied to the symbols, so the chosen frame is an exact rearrangement of the
 * input and recovery is lossless.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paprlab/permutation.hpp"
#include "paprlab/selection.hpp"

namespace paprlab {

/// Default cap on N for full N! enumeration.
inline constexpr std::size_t kDefaultExhaustiveLimit = 10;

/// out[i] = frame[p[i]].
SymbolFrame apply_permutation(const SymbolFrame& frame, const Permutation& p);

/// Search all N! orderings in rank order; ties go to the lowest rank.
/// Throws std::invalid_argument when N exceeds `max_n`, pointing at the sampled variant.
SelectionResult isis_select_exhaustive(const SymbolFrame& frame, std::size_t oversample,
                                       std::size_t max_n = kDefaultExhaustiveLimit);
SelectionResult isis_select_exhaustive(const SymbolFrame& frame, PaprEvaluator& evaluator,
                                       std::size_t max_n = kDefaultExhaustiveLimit);

/**
 * Candidate ranks for the sampled search, in draw order.
 *
 * Element 0 is always rank 0 (the unmodified frame). The rest are distinct ranks
 * from [1, n!) drawn uniformly without replacement from an mt19937_64 seeded with
 * `seed`, stopping at min(K, n!) candidates. For a fixed seed, the list for K is a
 * prefix of the list for any K' > K.
 */
std::vector<std::uint64_t> isis_candidate_ranks(std::size_t n, std::uint64_t count, std::uint64_t seed);

/// Best ordering among isis_candidate_ranks(N, K, seed). Requires K >= 1 and N <= 20.
SelectionResult isis_select_sampled(const SymbolFrame& frame, std::uint64_t count, std::uint64_t seed,
                                    std::size_t oversample);
SelectionResult isis_select_sampled(const SymbolFrame& frame, std::uint64_t count, std::uint64_t seed,
                                    PaprEvaluator& evaluator);

/// Receiver: apply the inverse of perm_unrank(side_info) to the received order.
SymbolFrame isis_recover_direct(const SymbolFrame& received, PermutationRank side_info);

/// Largest N accepted by isis_recover_paper.
inline constexpr std::size_t kPaperRecoveryLimit = 6;

/// Thrown when the table-matching receiver finds no candidate for the side information.
class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Receiver, literal table-matching form.
 *
 * Enumerates every ordering X of the received symbols, walks X's own
 * lexicographic permutation table to row `side_info`, and returns the first X
 * whose row equals the received frame. Cost grows like (N!)^2, so N is capped at
 * kPaperRecoveryLimit. With repeated symbols several X can match; the first in
 * enumeration order is returned.
 */
SymbolFrame isis_recover_paper(const SymbolFrame& received, PermutationRank side_info);

}  // namespace paprlab

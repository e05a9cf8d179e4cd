#pragma once

// Selected mapping: rotate the frame by each bank vector, keep the lowest-PAPR copy.

#include <cstddef>
#include <cstdint>

#include "paprlab/phase_vectors.hpp"
#include "paprlab/selection.hpp"

namespace paprlab {

/// Evaluates all U candidates frame * bank[i]; ties go to the lowest index.
/// Throws std::invalid_argument when the bank length differs from the frame length.
SelectionResult slm_select(const SymbolFrame& frame, const PhaseVectorBank& bank, std::size_t oversample);

/// Same as above with a caller-owned evaluator sized for the frame.
SelectionResult slm_select(const SymbolFrame& frame, const PhaseVectorBank& bank, PaprEvaluator& evaluator);

/// Undo the rotation: received * conj(bank[index]).
SymbolFrame slm_recover(const SymbolFrame& received, std::uint64_t index, const PhaseVectorBank& bank);

/// ceil(log2(U)).
unsigned slm_side_info_bits(std::size_t bank_size);

}  // namespace paprlab

#include "paprlab/slm.hpp"

#include <stdexcept>
#include <string>

namespace paprlab {

unsigned slm_side_info_bits(std::size_t bank_size) {
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < bank_size) ++bits;
    return bits;
}

SelectionResult slm_select(const SymbolFrame& frame, const PhaseVectorBank& bank, std::size_t oversample) {
    PaprEvaluator evaluator(frame.size(), oversample);
    return slm_select(frame, bank, evaluator);
}

SelectionResult slm_select(const SymbolFrame& frame, const PhaseVectorBank& bank, PaprEvaluator& evaluator) {
    if (bank.size() == 0) throw std::invalid_argument("slm_select: empty phase-vector bank");
    for (const auto& v : bank.vectors) {
        if (v.size() != frame.size()) {
            throw std::invalid_argument("slm_select: phase vector length " + std::to_string(v.size()) +
                                        " does not match frame length " + std::to_string(frame.size()));
        }
    }
    if (evaluator.subcarriers() != frame.size()) {
        throw std::invalid_argument("slm_select: evaluator sized for a different frame length");
    }

    TieBreakingMin best;
    for (std::size_t i = 0; i < bank.size(); ++i) {
        best.offer(i, evaluator.linear_rotated(frame.symbols, bank.vectors[i].rotations));
    }

    const auto index = best.best_index();
    const auto& rot = bank.vectors[index].rotations;
    SelectionResult result;
    result.chosen.symbols.resize(frame.size());
    for (std::size_t n = 0; n < frame.size(); ++n) result.chosen.symbols[n] = frame.symbols[n] * rot[n];
    result.side_info = SideInfo{SideInfoKind::slm_index, index, slm_side_info_bits(bank.size())};
    result.papr = PaprValue::from_linear(best.best_value());
    result.candidates_evaluated = bank.size();
    return result;
}

SymbolFrame slm_recover(const SymbolFrame& received, std::uint64_t index, const PhaseVectorBank& bank) {
    if (index >= bank.size()) {
        throw std::invalid_argument("slm_recover: side information " + std::to_string(index) +
                                    " out of range for a bank of " + std::to_string(bank.size()));
    }
    const auto& rot = bank.vectors[index].rotations;
    if (rot.size() != received.size()) {
        throw std::invalid_argument("slm_recover: phase vector length does not match frame length");
    }
    SymbolFrame out;
    out.symbols.resize(received.size());
    for (std::size_t n = 0; n < received.size(); ++n) out.symbols[n] = received.symbols[n] * std::conj(rot[n]);
    return out;
}

}  // namespace paprlab

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "paprlab/signal.hpp"

namespace paprlab {

/// Relative band within which two candidate PAPRs count as tied.
///
/// Distinct candidates can be mathematically equal (a cyclic shift of the
/// subcarrier order only modulates the time signal) yet differ in the last
/// bits after rounding. Inside this band the lowest index wins.
inline constexpr double kTieTolerance = 1e-12;

enum class SideInfoKind { slm_index, permutation_rank };

/// What the receiver needs to undo a selection.
struct SideInfo {
    SideInfoKind kind = SideInfoKind::slm_index;
    std::uint64_t value = 0;  // bank index for SLM, lexicographic rank for ISIS
    unsigned bits = 0;        // ceil(log2(candidate space size))
};

struct SelectionResult {
    SymbolFrame chosen;
    SideInfo side_info;
    PaprValue papr;
    std::uint64_t candidates_evaluated = 0;
};

/**
 * Streaming argmin with the tie rule above.
 *
 * Candidates may be offered in any index order; best() is the lowest index whose
 * value is within kTieTolerance of the overall minimum.
 */
class TieBreakingMin {
public:
    void offer(std::uint64_t index, double value);

    bool empty() const noexcept { return near_.empty(); }
    std::uint64_t best_index() const;
    double best_value() const;
    double minimum() const noexcept { return min_; }

private:
    struct Entry {
        std::uint64_t index;
        double value;
    };
    const Entry& best() const;

    double min_ = 0.0;
    std::vector<Entry> near_;
};

}  // namespace paprlab

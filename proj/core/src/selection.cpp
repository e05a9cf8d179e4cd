#include "paprlab/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace paprlab {

void TieBreakingMin::offer(std::uint64_t index, double value) {
    if (near_.empty() || value < min_) {
        min_ = value;
        const double band = min_ * (1.0 + kTieTolerance);
        std::erase_if(near_, [band](const Entry& e) { return e.value > band; });
        near_.push_back({index, value});
    } else if (value <= min_ * (1.0 + kTieTolerance)) {
        near_.push_back({index, value});
    }
}

const TieBreakingMin::Entry& TieBreakingMin::best() const {
    if (near_.empty()) throw std::logic_error("TieBreakingMin: no candidates offered");
    return *std::min_element(near_.begin(), near_.end(),
                             [](const Entry& a, const Entry& b) { return a.index < b.index; });
}

std::uint64_t TieBreakingMin::best_index() const { return best().index; }

double TieBreakingMin::best_value() const { return best().value; }

}  // namespace paprlab

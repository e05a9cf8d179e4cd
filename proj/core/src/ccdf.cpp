#include "paprlab/ccdf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace paprlab {

std::vector<double> make_threshold_grid(double min_db, double max_db, double step_db) {
    if (!std::isfinite(min_db) || !std::isfinite(max_db) || !std::isfinite(step_db)) {
        throw std::invalid_argument("threshold grid: bounds and step must be finite");
    }
    if (!(step_db > 0.0)) throw std::invalid_argument("threshold grid: step must be positive");
    if (max_db < min_db) throw std::invalid_argument("threshold grid: max must not be below min");

    const auto count = static_cast<std::size_t>(std::floor((max_db - min_db) / step_db + 1e-9)) + 1;
    if (count > 1'000'000) throw std::invalid_argument("threshold grid: more than 10^6 points");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        // round to 1e-9 dB so printed grids do not carry step-accumulation noise
        grid[i] = std::round((min_db + static_cast<double>(i) * step_db) * 1e9) / 1e9;
    }
    return grid;
}

CcdfCurve estimate_ccdf(std::span<const double> papr_db, std::span<const double> thresholds_db,
                        std::string label) {
    if (papr_db.empty()) throw std::invalid_argument("estimate_ccdf: no PAPR samples");
    for (std::size_t i = 1; i < thresholds_db.size(); ++i) {
        if (!(thresholds_db[i] > thresholds_db[i - 1])) {
            throw std::invalid_argument("estimate_ccdf: thresholds must be strictly increasing");
        }
    }

    std::vector<double> sorted(papr_db.begin(), papr_db.end());
    std::sort(sorted.begin(), sorted.end());

    CcdfCurve curve;
    curve.label = std::move(label);
    curve.n_samples = sorted.size();
    curve.thresholds_db.assign(thresholds_db.begin(), thresholds_db.end());
    curve.prob.reserve(thresholds_db.size());
    const double total = static_cast<double>(sorted.size());
    for (double t : thresholds_db) {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
        curve.prob.push_back(static_cast<double>(above) / total);
    }
    return curve;
}

std::optional<double> threshold_at(const CcdfCurve& curve, double level) {
    for (std::size_t i = 0; i < curve.prob.size(); ++i) {
        if (curve.prob[i] <= level) return curve.thresholds_db[i];
    }
    return std::nullopt;
}

double papr_at_ccdf(std::span<const double> papr_db, double level) {
    if (papr_db.empty()) throw std::invalid_argument("papr_at_ccdf: no PAPR samples");
    if (!(level >= 0.0 && level <= 1.0)) throw std::invalid_argument("papr_at_ccdf: level must lie in [0, 1]");
    std::vector<double> desc(papr_db.begin(), papr_db.end());
    std::sort(desc.begin(), desc.end(), std::greater<>());
    // samples allowed strictly above the answer
    const auto allowed = static_cast<std::size_t>(std::floor(level * static_cast<double>(desc.size()) + 1e-9));
    if (allowed >= desc.size()) return desc.back();
    return desc[allowed];
}

}  // namespace paprlab

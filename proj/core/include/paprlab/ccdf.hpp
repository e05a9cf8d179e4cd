#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace paprlab {

/// Empirical Pr{PAPR > threshold} on a threshold grid.
struct CcdfCurve {
    std::string label;
    std::vector<double> thresholds_db;
    std::vector<double> prob;
    std::size_t n_samples = 0;
};

/// Uniform grid min, min+step, ... up to max (inclusive within rounding).
/// Throws std::invalid_argument unless step > 0 and max >= min.
std::vector<double> make_threshold_grid(double min_db, double max_db, double step_db);

/// prob[t] = #{samples > thresholds[t]} / #samples. Thresholds must be strictly increasing.
CcdfCurve estimate_ccdf(std::span<const double> papr_db, std::span<const double> thresholds_db,
                        std::string label = {});

/// Smallest grid threshold at which the curve has dropped to `level` or below.
std::optional<double> threshold_at(const CcdfCurve& curve, double level);

/// Smallest t with #{samples > t} / #samples <= level, read from the samples
/// themselves (no grid quantization). Requires a non-empty sample set and level in [0, 1].
double papr_at_ccdf(std::span<const double> papr_db, double level);

}  // namespace paprlab

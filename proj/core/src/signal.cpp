#include "paprlab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace paprlab {

namespace {

// Peak-to-mean ratio of |x|^2 over the samples.
double peak_to_mean(std::span<const Complex> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("papr: empty time-domain frame");
    }
    double peak = 0.0;
    double total = 0.0;
    for (const Complex& s : samples) {
        const double p = std::norm(s);
        peak = std::max(peak, p);
        total += p;
    }
    const double mean = total / static_cast<double>(samples.size());
    if (!(mean >= kMinMeanPower)) {
        throw std::invalid_argument("papr: frame has zero mean power");
    }
    return peak / mean;
}

void evaluate_grid(std::span<const Complex> input, std::span<const Complex> twiddle,
                   std::span<Complex> out) {
    const std::size_t n = input.size();
    const std::size_t grid = out.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < grid; ++k) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;  // (n*k) mod grid
        for (std::size_t c = 0; c < n; ++c) {
            acc += input[c] * twiddle[idx];
            idx += k;
            if (idx >= grid) idx %= grid;
        }
        out[k] = acc * scale;
    }
}

std::vector<Complex> make_twiddles(std::size_t grid) {
    std::vector<Complex> tw(grid);
    for (std::size_t m = 0; m < grid; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(grid);
        tw[m] = Complex(std::cos(angle), std::sin(angle));
    }
    return tw;
}

void check_dims(std::size_t n, std::size_t oversample) {
    if (n == 0) throw std::invalid_argument("synthesize: frame must contain at least one symbol");
    if (oversample == 0) throw std::invalid_argument("synthesize: oversampling factor must be >= 1");
}

void check_finite(std::span<const Complex> symbols) {
    for (const Complex& s : symbols) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw std::invalid_argument("synthesize: frame contains a non-finite symbol");
        }
    }
}

}  // namespace

PaprValue PaprValue::from_linear(double linear) {
    return PaprValue{linear, 10.0 * std::log10(linear)};
}

SymbolFrame map_qpsk(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("map_qpsk: bit count must be even, got " + std::to_string(bits.size()));
    }
    constexpr double a = std::numbers::sqrt2 / 2.0;
    SymbolFrame frame;
    frame.symbols.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        const std::uint8_t b0 = bits[i];
        const std::uint8_t b1 = bits[i + 1];
        if (b0 > 1 || b1 > 1) {
            throw std::invalid_argument("map_qpsk: bits must be 0 or 1");
        }
        // imaginary sign from the first bit, real sign from b0 xor b1
        const double re = (b0 == b1) ? (b0 == 0 ? a : -a) : (b0 == 0 ? -a : a);
        const double im = (b0 == 0) ? a : -a;
        frame.symbols.emplace_back(re, im);
    }
    return frame;
}

TimeDomainFrame synthesize(const SymbolFrame& frame, std::size_t oversample) {
    check_dims(frame.size(), oversample);
    check_finite(frame.symbols);
    const std::size_t grid = frame.size() * oversample;
    TimeDomainFrame out;
    out.oversample = oversample;
    out.samples.resize(grid);
    const auto tw = make_twiddles(grid);
    evaluate_grid(frame.symbols, tw, out.samples);
    return out;
}

PaprValue papr(const TimeDomainFrame& tdf) {
    return PaprValue::from_linear(peak_to_mean(tdf.samples));
}

PaprValue papr_of(const SymbolFrame& frame, std::size_t oversample) {
    return papr(synthesize(frame, oversample));
}

PaprEvaluator::PaprEvaluator(std::size_t n_subcarriers, std::size_t oversample)
    : n_(n_subcarriers), oversample_(oversample), grid_(n_subcarriers * oversample) {
    check_dims(n_subcarriers, oversample);
    twiddle_ = make_twiddles(grid_);
    input_.resize(n_ + grid_);
}

double PaprEvaluator::score() {
    std::span<Complex> buf(input_);
    evaluate_grid(buf.first(n_), twiddle_, buf.subspan(n_, grid_));
    return peak_to_mean(buf.subspan(n_, grid_));
}

double PaprEvaluator::linear(std::span<const Complex> symbols) {
    if (symbols.size() != n_) throw std::invalid_argument("PaprEvaluator: frame length mismatch");
    std::copy(symbols.begin(), symbols.end(), input_.begin());
    return score();
}

double PaprEvaluator::linear_reordered(std::span<const Complex> symbols,
                                       std::span<const std::size_t> order) {
    if (symbols.size() != n_ || order.size() != n_) {
        throw std::invalid_argument("PaprEvaluator: frame length mismatch");
    }
    for (std::size_t i = 0; i < n_; ++i) input_[i] = symbols[order[i]];
    return score();
}

double PaprEvaluator::linear_rotated(std::span<const Complex> symbols,
                                     std::span<const Complex> rotation) {
    if (symbols.size() != n_ || rotation.size() != n_) {
        throw std::invalid_argument("PaprEvaluator: frame length mismatch");
    }
    for (std::size_t i = 0; i < n_; ++i) input_[i] = symbols[i] * rotation[i];
    return score();
}

}  // namespace paprlab

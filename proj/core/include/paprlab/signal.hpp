#pragma once

/**
 * @file signal.hpp
 * @brief Complex-baseband primitives: QPSK mapping, OFDM synthesis and the PAPR metric.
 *
 * A frame of N frequency-domain symbols X_n is synthesized onto a uniform grid of
 * N*L time samples,
 *
 *     x[k] = 1/sqrt(N) * sum_{n=0}^{N-1} X_n * exp(j*2*pi*n*k / (N*L)),  k = 0..N*L-1
 *
 * which is the zero-padded inverse DFT with 1/sqrt(N) scaling. Carriers occupy
 * bins 0..N-1; there is no spectral centering.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paprlab {

using Complex = std::complex<double>;

/// Frequency-domain OFDM frame, one symbol per subcarrier.
struct SymbolFrame {
    std::vector<Complex> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    bool operator==(const SymbolFrame&) const = default;
};

/// Time-domain samples of one synthesized frame.
struct TimeDomainFrame {
    std::vector<Complex> samples;
    std::size_t oversample = 1;
};

/// Peak-to-average power ratio, kept in both linear and dB form.
struct PaprValue {
    double linear = 1.0;
    double db = 0.0;

    static PaprValue from_linear(double linear);
};

/// Mean powers below this are treated as an all-zero frame.
inline constexpr double kMinMeanPower = 1e-300;

/// Gray-mapped QPSK: 00 -> (1+j)/sqrt2, 01 -> (-1+j)/sqrt2, 11 -> (-1-j)/sqrt2, 10 -> (1-j)/sqrt2.
/// Throws std::invalid_argument on an odd bit count or a bit value other than 0/1.
SymbolFrame map_qpsk(std::span<const std::uint8_t> bits);

/// Direct evaluation of the OFDM sum on the N*L grid.
TimeDomainFrame synthesize(const SymbolFrame& frame, std::size_t oversample);

/// max|x|^2 / mean|x|^2. Throws std::invalid_argument for an empty or all-zero frame.
PaprValue papr(const TimeDomainFrame& tdf);

/// Convenience: papr(synthesize(frame, oversample)).
PaprValue papr_of(const SymbolFrame& frame, std::size_t oversample);

/**
 * Reusable PAPR evaluator for a fixed (N, L).
 *
 * Holds a twiddle table indexed by (n*k) mod N*L plus a scratch buffer, so the
 * selection loops can score thousands of candidates per frame without
 * allocating. Not thread-safe; use one instance per worker.
 */
class PaprEvaluator {
public:
    PaprEvaluator(std::size_t n_subcarriers, std::size_t oversample);

    std::size_t subcarriers() const noexcept { return n_; }
    std::size_t oversample() const noexcept { return oversample_; }

    /// Linear PAPR of `symbols` (length N).
    double linear(std::span<const Complex> symbols);

    /// Linear PAPR of the frame reordered as symbols[order[0]], symbols[order[1]], ...
    double linear_reordered(std::span<const Complex> symbols, std::span<const std::size_t> order);

    /// Linear PAPR of the element-wise product symbols[n] * rotation[n].
    double linear_rotated(std::span<const Complex> symbols, std::span<const Complex> rotation);

private:
    double score();

    std::size_t n_;
    std::size_t oversample_;
    std::size_t grid_;
    std::vector<Complex> twiddle_;
    std::vector<Complex> input_;
};

}  // namespace paprlab

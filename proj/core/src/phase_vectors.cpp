#include "paprlab/phase_vectors.hpp"

#include <stdexcept>
#include <string>

namespace paprlab {

namespace {

PhaseVector to_phase_vector(const std::vector<int>& signs) {
    PhaseVector v;
    v.rotations.reserve(signs.size());
    for (int s : signs) v.rotations.emplace_back(static_cast<double>(s), 0.0);
    return v;
}

unsigned log2_exact(std::size_t v) {
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < v) ++bits;
    return bits;
}

}  // namespace

std::size_t sequency_to_natural(std::size_t sequency, std::size_t order) {
    const unsigned bits = log2_exact(order);
    const std::size_t gray = sequency ^ (sequency >> 1);
    std::size_t reversed = 0;
    for (unsigned b = 0; b < bits; ++b) {
        if (gray & (std::size_t{1} << b)) reversed |= std::size_t{1} << (bits - 1 - b);
    }
    return reversed;
}

std::vector<std::vector<int>> sylvester_hadamard(std::size_t order) {
    if (!is_power_of_two(order)) {
        throw std::invalid_argument("sylvester_hadamard: order must be a power of two, got " +
                                    std::to_string(order));
    }
    std::vector<std::vector<int>> h{{1}};
    while (h.size() < order) {
        const std::size_t k = h.size();
        std::vector<std::vector<int>> next(2 * k, std::vector<int>(2 * k));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                next[r][c] = h[r][c];
                next[r][c + k] = h[r][c];
                next[r + k][c] = h[r][c];
                next[r + k][c + k] = -h[r][c];
            }
        }
        h = std::move(next);
    }
    return h;
}

std::pair<std::vector<int>, std::vector<int>> golay_pair(std::size_t length) {
    if (!is_power_of_two(length)) {
        throw std::invalid_argument("golay_pair: length must be a power of two, got " +
                                    std::to_string(length));
    }
    std::vector<int> a{1};
    std::vector<int> b{1};
    while (a.size() < length) {
        std::vector<int> na = a;
        std::vector<int> nb = a;
        na.insert(na.end(), b.begin(), b.end());
        for (int v : b) nb.push_back(-v);
        a = std::move(na);
        b = std::move(nb);
    }
    return {a, b};
}

PhaseVectorBank gen_walsh_hadamard(std::size_t count, std::size_t length) {
    if (!is_power_of_two(count) || !is_power_of_two(length)) {
        throw std::invalid_argument("gen_walsh_hadamard: U and N must be powers of two");
    }
    if (count > length) {
        throw std::invalid_argument("gen_walsh_hadamard: U must not exceed N");
    }
    const auto h = sylvester_hadamard(length);
    PhaseVectorBank bank;
    for (std::size_t s = 0; s < count; ++s) {
        bank.vectors.push_back(to_phase_vector(h[sequency_to_natural(s, length)]));
    }
    return bank;
}

PhaseVectorBank gen_golay(std::size_t length) {
    const auto a = golay_pair(length).first;
    PhaseVectorBank bank;
    bank.vectors.push_back(to_phase_vector(std::vector<int>(length, 1)));
    bank.vectors.push_back(to_phase_vector(a));
    return bank;
}

}  // namespace paprlab

#include "paprlab/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace paprlab {

std::uint64_t factorial(std::size_t n) {
    if (n > kMaxRankedLength) {
        throw std::invalid_argument("factorial: " + std::to_string(n) + "! does not fit in 64 bits");
    }
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.mapping.resize(n);
    std::iota(p.mapping.begin(), p.mapping.end(), std::size_t{0});
    return p;
}

bool is_bijection(std::span<const std::size_t> mapping) noexcept {
    std::vector<bool> seen(mapping.size(), false);
    for (std::size_t v : mapping) {
        if (v >= mapping.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation perm_unrank(PermutationRank r) {
    if (r.n == 0) throw std::invalid_argument("perm_unrank: n must be positive");
    const std::uint64_t total = factorial(r.n);
    if (r.rank >= total) {
        throw std::invalid_argument("perm_unrank: rank " + std::to_string(r.rank) + " out of range for n=" +
                                    std::to_string(r.n));
    }
    std::vector<std::size_t> pool(r.n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});

    Permutation p;
    p.mapping.reserve(r.n);
    std::uint64_t rest = r.rank;
    std::uint64_t block = total;
    for (std::size_t remaining = r.n; remaining > 0; --remaining) {
        block /= remaining;  // (remaining-1)!
        const auto digit = static_cast<std::size_t>(rest / block);
        rest %= block;
        p.mapping.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return p;
}

PermutationRank perm_rank(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 0 || !is_bijection(p.mapping)) {
        throw std::invalid_argument("perm_rank: mapping is not a bijection on {0..n-1}");
    }
    if (n > kMaxRankedLength) {
        throw std::invalid_argument("perm_rank: n=" + std::to_string(n) + " exceeds the 64-bit rank range");
    }
    std::uint64_t rank = 0;
    std::uint64_t block = factorial(n);
    for (std::size_t i = 0; i < n; ++i) {
        block /= (n - i);
        std::size_t smaller_after = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.mapping[j] < p.mapping[i]) ++smaller_after;
        }
        rank += smaller_after * block;
    }
    return PermutationRank{rank, n};
}

Permutation inverse(const Permutation& p) {
    Permutation q;
    q.mapping.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q.mapping[p.mapping[i]] = i;
    return q;
}

unsigned rank_bits(std::size_t n) {
    const std::uint64_t count = factorial(n);
    unsigned bits = 0;
    while (bits < 64 && (std::uint64_t{1} << bits) < count) ++bits;
    return bits;
}

}  // namespace paprlab

#include "paprlab/isis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "paprlab/random.hpp"

namespace paprlab {

namespace {

SelectionResult finish(const SymbolFrame& frame, const TieBreakingMin& best, std::uint64_t evaluated) {
    const PermutationRank rank{best.best_index(), frame.size()};
    SelectionResult result;
    result.chosen = apply_permutation(frame, perm_unrank(rank));
    result.side_info = SideInfo{SideInfoKind::permutation_rank, rank.rank, rank_bits(frame.size())};
    result.papr = PaprValue::from_linear(best.best_value());
    result.candidates_evaluated = evaluated;
    return result;
}

void check_evaluator(const SymbolFrame& frame, const PaprEvaluator& evaluator, const char* who) {
    if (frame.size() == 0) throw std::invalid_argument(std::string(who) + ": empty frame");
    if (evaluator.subcarriers() != frame.size()) {
        throw std::invalid_argument(std::string(who) + ": evaluator sized for a different frame length");
    }
}

}  // namespace

SymbolFrame apply_permutation(const SymbolFrame& frame, const Permutation& p) {
    if (p.size() != frame.size()) {
        throw std::invalid_argument("apply_permutation: permutation length does not match frame length");
    }
    SymbolFrame out;
    out.symbols.reserve(frame.size());
    for (std::size_t idx : p.mapping) out.symbols.push_back(frame.symbols[idx]);
    return out;
}

SelectionResult isis_select_exhaustive(const SymbolFrame& frame, std::size_t oversample, std::size_t max_n) {
    PaprEvaluator evaluator(frame.size(), oversample);
    return isis_select_exhaustive(frame, evaluator, max_n);
}

SelectionResult isis_select_exhaustive(const SymbolFrame& frame, PaprEvaluator& evaluator, std::size_t max_n) {
    check_evaluator(frame, evaluator, "isis_select_exhaustive");
    const std::size_t n = frame.size();
    if (n > max_n || n > kMaxRankedLength) {
        throw std::invalid_argument("isis_select_exhaustive: N=" + std::to_string(n) +
                                    " exceeds the exhaustive budget of " + std::to_string(max_n) +
                                    " subcarriers (" + std::to_string(n) +
                                    "! candidates); use isis_select_sampled with a candidate count instead");
    }

    // next_permutation on the identity walks the table in rank order
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    TieBreakingMin best;
    std::uint64_t rank = 0;
    do {
        best.offer(rank, evaluator.linear_reordered(frame.symbols, order));
        ++rank;
    } while (std::next_permutation(order.begin(), order.end()));
    return finish(frame, best, rank);
}

std::vector<std::uint64_t> isis_candidate_ranks(std::size_t n, std::uint64_t count, std::uint64_t seed) {
    if (count == 0) throw std::invalid_argument("isis_candidate_ranks: candidate count must be >= 1");
    if (n == 0) throw std::invalid_argument("isis_candidate_ranks: n must be positive");
    if (n > kMaxRankedLength) {
        throw std::invalid_argument("isis_candidate_ranks: N=" + std::to_string(n) +
                                    " exceeds the 64-bit rank range (N <= 20)");
    }
    const std::uint64_t space = factorial(n);
    const std::uint64_t target = std::min(count, space);

    std::vector<std::uint64_t> ranks;
    ranks.reserve(target);
    ranks.push_back(0);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(target);
    seen.insert(0);
    Engine engine(seed);
    while (ranks.size() < target) {
        const std::uint64_t r = 1 + uniform_below(engine, space - 1);
        if (seen.insert(r).second) ranks.push_back(r);
    }
    return ranks;
}

SelectionResult isis_select_sampled(const SymbolFrame& frame, std::uint64_t count, std::uint64_t seed,
                                    std::size_t oversample) {
    PaprEvaluator evaluator(frame.size(), oversample);
    return isis_select_sampled(frame, count, seed, evaluator);
}

SelectionResult isis_select_sampled(const SymbolFrame& frame, std::uint64_t count, std::uint64_t seed,
                                    PaprEvaluator& evaluator) {
    check_evaluator(frame, evaluator, "isis_select_sampled");
    const std::size_t n = frame.size();
    const auto ranks = isis_candidate_ranks(n, count, seed);
    TieBreakingMin best;
    for (std::uint64_t r : ranks) {
        const auto p = perm_unrank(PermutationRank{r, n});
        best.offer(r, evaluator.linear_reordered(frame.symbols, p.mapping));
    }
    return finish(frame, best, ranks.size());
}

SymbolFrame isis_recover_direct(const SymbolFrame& received, PermutationRank side_info) {
    if (side_info.n != received.size()) {
        throw std::invalid_argument("isis_recover_direct: side information is for N=" + std::to_string(side_info.n) +
                                    " but the frame has " + std::to_string(received.size()) + " symbols");
    }
    return apply_permutation(received, inverse(perm_unrank(side_info)));
}

SymbolFrame isis_recover_paper(const SymbolFrame& received, PermutationRank side_info) {
    const std::size_t n = received.size();
    if (side_info.n != n) {
        throw std::invalid_argument("isis_recover_paper: side information is for N=" + std::to_string(side_info.n) +
                                    " but the frame has " + std::to_string(n) + " symbols");
    }
    if (n == 0 || n > kPaperRecoveryLimit) {
        throw std::invalid_argument("isis_recover_paper: supports 1 <= N <= " +
                                    std::to_string(kPaperRecoveryLimit) + ", got " + std::to_string(n));
    }
    if (side_info.rank >= factorial(n)) {
        throw std::invalid_argument("isis_recover_paper: rank out of range");
    }

    std::vector<std::size_t> outer(n);
    std::iota(outer.begin(), outer.end(), std::size_t{0});
    do {
        SymbolFrame candidate;
        for (std::size_t i : outer) candidate.symbols.push_back(received.symbols[i]);

        // row side_info of the candidate's own table
        std::vector<std::size_t> inner(n);
        std::iota(inner.begin(), inner.end(), std::size_t{0});
        for (std::uint64_t row = 0; row < side_info.rank; ++row) {
            std::next_permutation(inner.begin(), inner.end());
        }
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
            match = candidate.symbols[inner[i]] == received.symbols[i];
        }
        if (match) return candidate;
    } while (std::next_permutation(outer.begin(), outer.end()));

    throw ProtocolError("isis_recover_paper: no ordering of the received symbols maps to row " +
                        std::to_string(side_info.rank));
}

}  // namespace paprlab

#include "paprlab/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "paprlab/isis.hpp"
#include "paprlab/phase_vectors.hpp"
#include "paprlab/random.hpp"
#include "paprlab/slm.hpp"

namespace paprlab {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 5> kSchemeNames{{
    {Scheme::baseline, "baseline"},
    {Scheme::slm_walsh, "slm-walsh"},
    {Scheme::slm_golay, "slm-golay"},
    {Scheme::isis_exhaustive, "isis-exhaustive"},
    {Scheme::isis_sampled, "isis-sampled"},
}};

// Per-worker scratch state for one config.
struct FrameScorer {
    const SimConfig& config;
    PaprEvaluator evaluator;
    PhaseVectorBank bank;

    explicit FrameScorer(const SimConfig& c) : config(c), evaluator(c.n_subcarriers, c.oversample) {
        if (c.scheme == Scheme::slm_walsh) bank = gen_walsh_hadamard(c.slm_u, c.n_subcarriers);
        if (c.scheme == Scheme::slm_golay) bank = gen_golay(c.n_subcarriers);
    }

    // (papr dB, side info, candidates)
    std::tuple<double, std::uint64_t, std::uint64_t> score(std::uint64_t index) {
        const SymbolFrame frame = gen_random_frame(config.n_subcarriers, config.seed, index);
        switch (config.scheme) {
            case Scheme::baseline:
                return {PaprValue::from_linear(evaluator.linear(frame.symbols)).db, 0, 1};
            case Scheme::slm_walsh:
            case Scheme::slm_golay: {
                const auto r = slm_select(frame, bank, evaluator);
                return {r.papr.db, r.side_info.value, r.candidates_evaluated};
            }
            case Scheme::isis_exhaustive: {
                const auto r = isis_select_exhaustive(frame, evaluator);
                return {r.papr.db, r.side_info.value, r.candidates_evaluated};
            }
            case Scheme::isis_sampled: {
                const auto seed = derive_seed(config.seed, streams::isis_ranks, index);
                const auto r = isis_select_sampled(frame, config.isis_k, seed, evaluator);
                return {r.papr.db, r.side_info.value, r.candidates_evaluated};
            }
        }
        throw std::logic_error("unknown scheme");
    }
};

}  // namespace

std::string_view scheme_name(Scheme s) noexcept {
    for (const auto& [scheme, name] : kSchemeNames) {
        if (scheme == s) return name;
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (const auto& [scheme, n] : kSchemeNames) {
        if (n == name) return scheme;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                "' (expected baseline, slm-walsh, slm-golay, isis-exhaustive or isis-sampled)");
}

std::vector<double> SimConfig::default_threshold_grid() { return make_threshold_grid(0.0, 12.0, 0.1); }

void validate(const SimConfig& c) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (c.n_subcarriers == 0) fail("n_subcarriers must be >= 1");
    if (c.oversample == 0) fail("oversample must be >= 1");
    if (c.n_frames == 0) fail("n_frames must be >= 1");
    if (c.threshold_grid.empty()) fail("threshold grid must not be empty");
    for (std::size_t i = 1; i < c.threshold_grid.size(); ++i) {
        if (!(c.threshold_grid[i] > c.threshold_grid[i - 1])) fail("threshold grid must be strictly increasing");
    }
    const std::string n = std::to_string(c.n_subcarriers);
    switch (c.scheme) {
        case Scheme::baseline:
            break;
        case Scheme::slm_walsh:
            if (!is_power_of_two(c.n_subcarriers)) fail("slm-walsh needs a power-of-two N, got " + n);
            if (!is_power_of_two(c.slm_u)) fail("slm-walsh needs a power-of-two U, got " + std::to_string(c.slm_u));
            if (c.slm_u > c.n_subcarriers) fail("slm-walsh needs U <= N");
            break;
        case Scheme::slm_golay:
            if (!is_power_of_two(c.n_subcarriers)) fail("slm-golay needs a power-of-two N, got " + n);
            if (c.slm_u != 2) fail("slm-golay bank has exactly U=2 vectors");
            break;
        case Scheme::isis_exhaustive:
            if (c.n_subcarriers > kDefaultExhaustiveLimit) {
                fail("isis-exhaustive is limited to N <= " + std::to_string(kDefaultExhaustiveLimit) + " (got " + n +
                     "); use isis-sampled with --isis-k");
            }
            break;
        case Scheme::isis_sampled:
            if (c.isis_k == 0) fail("isis-sampled needs K >= 1");
            if (c.n_subcarriers > kMaxRankedLength) {
                fail("isis-sampled is limited to N <= " + std::to_string(kMaxRankedLength) + " (got " + n + ")");
            }
            break;
    }
}

std::string scheme_label(const SimConfig& c, bool with_n) {
    std::string label;
    switch (c.scheme) {
        case Scheme::baseline: label = "baseline"; break;
        case Scheme::slm_walsh: label = "slm_walsh_U" + std::to_string(c.slm_u); break;
        case Scheme::slm_golay: label = "slm_golay_U" + std::to_string(c.slm_u); break;
        case Scheme::isis_exhaustive: label = "isis_exhaustive"; break;
        case Scheme::isis_sampled: label = "isis_sampled_K" + std::to_string(c.isis_k); break;
    }
    if (with_n) label += "_N" + std::to_string(c.n_subcarriers);
    return label;
}

unsigned side_info_bits(const SimConfig& c) {
    switch (c.scheme) {
        case Scheme::baseline: return 0;
        case Scheme::slm_walsh:
        case Scheme::slm_golay: return slm_side_info_bits(c.slm_u);
        case Scheme::isis_exhaustive:
        case Scheme::isis_sampled: return rank_bits(c.n_subcarriers);
    }
    return 0;
}

SymbolFrame gen_random_frame(std::size_t n, std::uint64_t master_seed, std::uint64_t index) {
    Engine engine(derive_seed(master_seed, streams::frame_bits, index));
    std::vector<std::uint8_t> bits(2 * n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i % 64 == 0) word = engine();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
    }
    return map_qpsk(bits);
}

ExperimentResult run_experiment(const SimConfig& config, RunOptions options) {
    validate(config);

    ExperimentResult result;
    result.config = config;
    result.papr_db.resize(config.n_frames);
    result.side_info.resize(config.n_frames);
    result.side_info_bits = side_info_bits(config);
    std::vector<std::uint64_t> candidates(config.n_frames);

    unsigned workers = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.n_frames));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            FrameScorer scorer(config);
            for (std::size_t i = next++; i < config.n_frames; i = next++) {
                std::tie(result.papr_db[i], result.side_info[i], candidates[i]) = scorer.score(i);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = config.n_frames;
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    for (auto c : candidates) result.candidates_evaluated += c;
    result.curve = estimate_ccdf(result.papr_db, config.threshold_grid, scheme_label(config));
    return result;
}

std::vector<ExperimentResult> run_experiments(const std::vector<SimConfig>& configs, RunOptions options) {
    for (const auto& c : configs) validate(c);
    std::vector<ExperimentResult> out;
    out.reserve(configs.size());
    for (const auto& c : configs) out.push_back(run_experiment(c, options));
    return out;
}

unsigned threads_from_env() {
    const char* raw = std::getenv("PAPRLAB_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    const std::string value(raw);
    std::size_t pos = 0;
    unsigned long parsed = 0;
    try {
        parsed = std::stoul(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || value.front() == '-' || parsed > 4096) {
        throw std::invalid_argument("PAPRLAB_THREADS must be a non-negative integer <= 4096, got '" + value + "'");
    }
    return static_cast<unsigned>(parsed);
}

}  // namespace paprlab

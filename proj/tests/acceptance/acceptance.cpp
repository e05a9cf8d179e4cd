// End-to-end acceptance run: reproduces the three CCDF experiments at the
// reference parameters and checks every exit criterion at its fixed tolerance.
// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paprlab/ccdf.hpp"
#include "paprlab/experiment.hpp"
#include "paprlab/isis.hpp"
#include "paprlab/phase_vectors.hpp"
#include "paprlab/presets.hpp"
#include "paprlab/slm.hpp"

using namespace paprlab;

namespace {

constexpr double kLevel = 1e-2;          // CCDF level at which thresholds are read
constexpr double kDominanceSlackDb = 1e-10;

// Criterion tolerances.
constexpr double kFig5MinGapDb = 1.0;
constexpr double kFig5MaxGapDb = 3.5;
constexpr double kFamilyMaxDiffDb = 0.5;
constexpr double kK8VsSlmDb = 1.0;
constexpr double kK1000VsExhaustiveDb = 0.3;
constexpr double kFig5RuntimeLimitS = 300.0;

struct Outcome {
    bool pass;
    std::string detail;
};

double at_level(const ExperimentResult& r) { return papr_at_ccdf(r.papr_db, kLevel); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Runs {
    std::vector<ExperimentResult> fig5, fig6, fig7;
    double fig5_seconds = 0.0;
};

Outcome fig5_reproduction(const Runs& runs) {
    const double walsh = at_level(runs.fig5[1]);
    const double isis = at_level(runs.fig5[3]);
    const double gap = walsh - isis;
    const bool ok = gap >= kFig5MinGapDb && gap <= kFig5MaxGapDb && runs.fig5_seconds <= kFig5RuntimeLimitS;
    return {ok, fmt("SLM-Walsh(U=2) %.3f dB, ISIS-exhaustive %.3f dB, gap %.3f dB (need %.1f..%.1f); "
                    "baseline %.3f dB; runtime %.1f s",
                    walsh, isis, gap, kFig5MinGapDb, kFig5MaxGapDb, at_level(runs.fig5[0]), runs.fig5_seconds)};
}

Outcome family_equivalence(const Runs& runs) {
    const double walsh = at_level(runs.fig5[1]);
    const double golay = at_level(runs.fig5[2]);
    const double diff = std::abs(walsh - golay);
    return {diff < kFamilyMaxDiffDb,
            fmt("Walsh %.3f dB, Golay %.3f dB, |diff| %.3f dB (need < %.1f)", walsh, golay, diff, kFamilyMaxDiffDb)};
}

Outcome fig6_reproduction(const Runs& runs) {
    const double slm = at_level(runs.fig5[1]);
    std::vector<double> t;
    for (std::size_t i = 0; i < 4; ++i) t.push_back(at_level(runs.fig6[i]));
    const double exhaustive = at_level(runs.fig6[4]);
    bool monotone = true;
    for (std::size_t i = 1; i < t.size(); ++i) monotone = monotone && t[i] <= t[i - 1];
    const bool k8_ok = std::abs(t[0] - slm) <= kK8VsSlmDb;
    const bool k1000_ok = std::abs(t[3] - exhaustive) <= kK1000VsExhaustiveDb;
    return {k8_ok && monotone && k1000_ok,
            fmt("K=8 %.3f, K=100 %.3f, K=500 %.3f, K=1000 %.3f, exhaustive %.3f, SLM %.3f dB; "
                "|K8-SLM| %.3f (<= %.1f) %s; monotone %s; |K1000-exh| %.3f (<= %.1f) %s",
                t[0], t[1], t[2], t[3], exhaustive, slm, std::abs(t[0] - slm), kK8VsSlmDb, k8_ok ? "ok" : "FAIL",
                monotone ? "ok" : "FAIL", std::abs(t[3] - exhaustive), kK1000VsExhaustiveDb,
                k1000_ok ? "ok" : "FAIL")};
}

Outcome fig7_trend(const Runs& runs) {
    const double b4 = at_level(runs.fig7[0]), i4 = at_level(runs.fig7[1]);
    const double b8 = at_level(runs.fig7[2]), i8 = at_level(runs.fig7[3]);
    const double b16 = at_level(runs.fig7[4]), i16 = at_level(runs.fig7[5]);
    const bool increasing = b4 < b8 && b8 < b16;
    const bool wider = (b16 - i16) > (b4 - i4);
    return {increasing && wider,
            fmt("baseline N=4/8/16: %.3f/%.3f/%.3f dB (%s); ISIS gap N=4 %.3f dB, N=8 %.3f dB, N=16 %.3f dB (%s)", b4,
                b8, b16, increasing ? "increasing" : "NOT increasing", b4 - i4, b8 - i8, b16 - i16,
                wider ? "wider at 16" : "NOT wider at 16")};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240505);
    const auto table = oracle::all_permutations(4);
    std::size_t select_mismatch = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto X = oracle::random_qpsk_frame(rng, 4);
        std::vector<double> values;
        for (const auto& p : table) {
            std::vector<Complex> y;
            for (auto i : p) y.push_back(X[i]);
            values.push_back(oracle::papr_linear(y, 2));
        }
        const auto best = oracle::argmin_lowest(values, kTieTolerance);
        const auto r = isis_select_exhaustive(SymbolFrame{X}, 2);
        const bool same = r.side_info.value == best && std::abs(r.papr.linear - values[best]) <= 1e-12 * values[best];
        select_mismatch += !same;
    }
    std::size_t recover_mismatch = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const SymbolFrame f{oracle::random_gaussian_frame(rng, n)};
        const PermutationRank s{rng() % factorial(n), n};
        const auto received = apply_permutation(f, perm_unrank(s));
        const auto direct = isis_recover_direct(received, s);
        recover_mismatch += !(isis_recover_paper(received, s) == direct && direct == f);
    }
    return {select_mismatch == 0 && recover_mismatch == 0,
            fmt("exhaustive vs 24-way enumeration: %zu/200 mismatches; paper vs direct recovery: %zu/1000 mismatches",
                select_mismatch, recover_mismatch)};
}

Outcome property_suite(const Runs& runs) {
    std::vector<std::string> failures;

    for (std::size_t n = 1; n <= 6; ++n) {
        const auto table = oracle::all_permutations(n);
        std::set<std::vector<std::size_t>> seen;
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const auto p = perm_unrank({r, n});
            if (p.mapping != table[r] || !seen.insert(p.mapping).second || perm_rank(p).rank != r) {
                failures.push_back(fmt("rank/unrank n=%zu r=%llu", n, static_cast<unsigned long long>(r)));
                break;
            }
        }
    }

    std::mt19937_64 rng(777);
    double worst_parseval = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const std::size_t l = 1 + rng() % 4;
        const auto X = oracle::random_gaussian_frame(rng, n);
        double et = 0.0, ef = 0.0;
        for (const auto& s : synthesize(SymbolFrame{X}, l).samples) et += std::norm(s);
        for (const auto& s : X) ef += std::norm(s);
        worst_parseval = std::max(worst_parseval, std::abs(et - static_cast<double>(l) * ef) / et);
    }
    if (worst_parseval > 1e-9) failures.push_back(fmt("Parseval rel err %.3g", worst_parseval));

    for (std::size_t n : {2, 4, 8, 16}) {
        const auto [a, b] = golay_pair(n);
        for (std::size_t k = 0; k < n; ++k) {
            const long sum = oracle::aperiodic_autocorrelation(a, k) + oracle::aperiodic_autocorrelation(b, k);
            if (sum != (k == 0 ? static_cast<long>(2 * n) : 0L)) failures.push_back(fmt("Golay n=%zu k=%zu", n, k));
        }
    }

    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        const auto bank = gen_walsh_hadamard(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double dot = 0.0;
                for (std::size_t c = 0; c < n; ++c) dot += bank.vectors[i].rotations[c].real() * bank.vectors[j].rotations[c].real();
                if (dot != (i == j ? static_cast<double>(n) : 0.0)) failures.push_back(fmt("Walsh n=%zu", n));
            }
        }
    }

    std::size_t roundtrip_fail = 0;
    const auto walsh = gen_walsh_hadamard(8, 8);
    const auto golay = gen_golay(8);
    for (std::uint64_t i = 0; i < 300; ++i) {
        const auto f = gen_random_frame(8, 31337, i);
        for (const auto* bank : {&walsh, &golay}) {
            const auto r = slm_select(f, *bank, 2);
            const auto back = slm_recover(r.chosen, r.side_info.value, *bank);
            for (std::size_t n = 0; n < 8; ++n) roundtrip_fail += std::abs(back.symbols[n] - f.symbols[n]) > 1e-12;
        }
        const auto s = isis_select_sampled(f, 100, i, 2);
        roundtrip_fail += !(isis_recover_direct(s.chosen, {s.side_info.value, 8}) == f);
        if (i < 30) {
            const auto e = isis_select_exhaustive(f, 2);
            roundtrip_fail += !(isis_recover_direct(e.chosen, {e.side_info.value, 8}) == f);
        }
    }
    if (roundtrip_fail) failures.push_back(fmt("%zu roundtrip failures", roundtrip_fail));

    // exhaustive <= sampled(K) <= baseline on every frame; fig5 and fig6 share seed and frames
    std::size_t order_fail = 0;
    const auto& base = runs.fig5[0].papr_db;
    const auto& exhaustive = runs.fig6[4].papr_db;
    for (std::size_t i = 0; i < base.size(); ++i) {
        double prev = base[i];
        for (std::size_t k = 0; k < 4; ++k) {
            const double s = runs.fig6[k].papr_db[i];
            order_fail += s > prev + kDominanceSlackDb;
            order_fail += exhaustive[i] > s + kDominanceSlackDb;
            prev = s;
        }
        order_fail += runs.fig5[1].papr_db[i] > base[i];
        order_fail += runs.fig5[2].papr_db[i] > base[i];
        order_fail += runs.fig5[3].papr_db[i] != exhaustive[i];
    }
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const auto& b = runs.fig7[2 * pair].papr_db;
        const auto& s = runs.fig7[2 * pair + 1].papr_db;
        for (std::size_t i = 0; i < b.size(); ++i) order_fail += s[i] > b[i] + kDominanceSlackDb;
    }
    if (order_fail) failures.push_back(fmt("%zu per-frame ordering violations", order_fail));

    std::string detail = fmt("Parseval worst rel err %.2e over 10^4 frames", worst_parseval);
    for (const auto& f : failures) detail += "; " + f;
    return {failures.empty(), detail};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const std::string tool = PAPRLAB_TOOL_PATH;
    const std::string dir = PAPRLAB_TEST_TMPDIR;
    const std::string a = dir + "/acceptance_fig5_t1.csv";
    const std::string b = dir + "/acceptance_fig5_t8.csv";
    std::remove(a.c_str());
    std::remove(b.c_str());
    const int ra = std::system(("PAPRLAB_THREADS=1 '" + tool + "' fig5 --seed 42 --out '" + a + "'").c_str());
    const int rb = std::system(("PAPRLAB_THREADS=8 '" + tool + "' fig5 --seed 42 --out '" + b + "'").c_str());
    const auto ca = read_file(a);
    const auto cb = read_file(b);
    const bool ok = ra == 0 && rb == 0 && !ca.empty() && ca == cb;
    return {ok, fmt("exit codes %d/%d, %zu vs %zu bytes, %s", ra, rb, ca.size(), cb.size(),
                    ca == cb ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
    const RunOptions options{threads_from_env()};
    Runs runs;
    const auto t0 = std::chrono::steady_clock::now();
    runs.fig5 = run_experiments(preset_fig5(kDefaultSeed), options);
    runs.fig5_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    runs.fig6 = run_experiments(preset_fig6(kDefaultSeed), options);
    runs.fig7 = run_experiments(preset_fig7(kDefaultSeed), options);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 fig5 ISIS vs SLM gap at 1e-2", [&] { return fig5_reproduction(runs); }},
        {"2 fig5 Walsh/Golay equivalence", [&] { return family_equivalence(runs); }},
        {"3 fig6 sampled-K convergence", [&] { return fig6_reproduction(runs); }},
        {"4 fig7 frame-size trend", [&] { return fig7_trend(runs); }},
        {"5 oracle equivalence", oracle_equivalence},
        {"6 property suite", [&] { return property_suite(runs); }},
        {"7 determinism across thread counts", determinism},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}

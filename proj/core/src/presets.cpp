#include "paprlab/presets.hpp"

namespace paprlab {

namespace {

SimConfig reference(std::uint64_t seed, Scheme scheme) {
    SimConfig c;
    c.n_subcarriers = 8;
    c.oversample = 2;
    c.n_frames = 512;
    c.scheme = scheme;
    c.seed = seed;
    return c;
}

}  // namespace

std::vector<SimConfig> preset_fig5(std::uint64_t seed) {
    return {reference(seed, Scheme::baseline), reference(seed, Scheme::slm_walsh),
            reference(seed, Scheme::slm_golay), reference(seed, Scheme::isis_exhaustive)};
}

std::vector<SimConfig> preset_fig6(std::uint64_t seed) {
    std::vector<SimConfig> out;
    for (std::uint64_t k : {8, 100, 500, 1000}) {
        SimConfig c = reference(seed, Scheme::isis_sampled);
        c.isis_k = k;
        out.push_back(c);
    }
    out.push_back(reference(seed, Scheme::isis_exhaustive));
    return out;
}

std::vector<SimConfig> preset_fig7(std::uint64_t seed) {
    std::vector<SimConfig> out;
    for (std::size_t n : {4, 8, 16}) {
        SimConfig base = reference(seed, Scheme::baseline);
        base.n_subcarriers = n;
        out.push_back(base);

        SimConfig isis = reference(seed, n <= 8 ? Scheme::isis_exhaustive : Scheme::isis_sampled);
        isis.n_subcarriers = n;
        isis.isis_k = 1000;
        out.push_back(isis);
    }
    return out;
}

}  // namespace paprlab

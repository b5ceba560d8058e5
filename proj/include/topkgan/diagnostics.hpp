#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "topkgan/gan.hpp"
#include "topkgan/metrics.hpp"
#include "topkgan/mog.hpp"
#include "topkgan/optim.hpp"

namespace topkgan {

struct StepProbeConfig {
    TrainState snapshot;
    std::size_t n_probe = 10000;
    double top_fraction = 0.75;
    double bottom_fraction = 0.25;
    std::uint64_t seed = 1;
    std::size_t prior_dim = 2;
    /// Optimizer for the single probe step; a fresh Adam state is always used.
    AdamConfig optim;

    void validate() const;
};

struct ProbeBin {
    std::size_t count = 0;
    double mean_cosine = 0.0;
    double mean_distance_delta = 0.0;
};

struct ProbeBranch {
    std::string name;
    std::size_t k = 0;
    std::array<ProbeBin, kSigmaBins> bins{};
    /// Samples that did not move, or that sat exactly on a mode before the update.
    std::size_t excluded = 0;
};

struct StepProbeReport {
    std::size_t n_probe = 0;
    ProbeBranch top;
    ProbeBranch bottom;
};

/// Applies one top-k and one bottom-k generator update to identical copies of
/// the snapshot and measures, per pre-update sigma bin, how the samples G(z)
/// move relative to their nearest mode. Both branches share the same z.
/// Empty bins report NaN means.
StepProbeReport step_probe(const StepProbeConfig& config, const MogSpec& spec);

}  // namespace topkgan

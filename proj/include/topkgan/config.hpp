#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "topkgan/diagnostics.hpp"
#include "topkgan/gan.hpp"
#include "topkgan/mog.hpp"

namespace topkgan {

/// Bad experiment configuration. The message names the offending key.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Everything a run needs, parsed from flat `key = value` text.
///
/// Only `modes` is required. Omitted keys take the mixture-of-Gaussians
/// defaults: batch 256, 100k iterations, Adam lr 1e-4, gamma 0.99,
/// nu = 75% of the batch, decay every 2000 iterations, 4-layer MLPs of
/// width 256, sigma 0.05, grid extent 2.
struct ExperimentConfig {
    std::size_t n_modes = 25;
    double extent = 2.0;
    double sigma = 0.05;

    TrainConfig train;
    EvalSettings eval;

    std::size_t ndb_bins = 100;
    double ndb_significance = 0.05;
    /// Save checkpoint_<iteration>.txt every this many iterations (0 = final only).
    std::size_t checkpoint_interval = 0;
    std::string out_dir = "run";
    bool plot = true;

    std::size_t probe_samples = 10000;
    double probe_top_fraction = 0.75;
    double probe_bottom_fraction = 0.25;
    double probe_lr = 1e-4;
    std::uint64_t probe_seed = 1;

    MogSpec mog() const;
    bool operator==(const ExperimentConfig& other) const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text listing every key; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

/// True when two configs describe the same experiment up to seed and output location.
bool same_experiment(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace topkgan

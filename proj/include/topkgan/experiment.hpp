#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "topkgan/config.hpp"
#include "topkgan/diagnostics.hpp"
#include "topkgan/gan.hpp"
#include "topkgan/report.hpp"

namespace topkgan {

/// Training stopped on a non-finite value; carries the last checkpoint written.
class RunDiverged : public std::runtime_error {
public:
    RunDiverged(const std::string& what, std::optional<std::filesystem::path> last_good)
        : std::runtime_error(what), last_good_(std::move(last_good)) {}
    const std::optional<std::filesystem::path>& last_good_checkpoint() const { return last_good_; }

private:
    std::optional<std::filesystem::path> last_good_;
};

/// Full evaluation of a generator: sample quality, sigma bins, NDB/K and
/// Frechet distance against a real sample that depends only on the seed.
RunSummary evaluate_state(const TrainState& state, const ExperimentConfig& config);

struct TrainOutputs {
    TrainRunResult run;
    RunSummary summary;
    std::filesystem::path dir;
};

/// Trains and writes config.txt, metrics.csv, summary.csv, samples.csv,
/// checkpoint.txt (+ checkpoint_<iteration>.txt), run.log and, when
/// config.plot is set, samples.svg and metrics.svg into config.out_dir.
/// With `resume_from`, training continues from that checkpoint and rows of an
/// existing metrics.csv up to the checkpoint iteration are kept.
TrainOutputs cmd_train(const ExperimentConfig& config,
                       const std::optional<std::filesystem::path>& resume_from = std::nullopt,
                       std::ostream* progress = nullptr);

/// Step probe on a saved checkpoint; writes probe.csv and the two probe figures.
StepProbeReport cmd_probe(const std::filesystem::path& checkpoint, const ExperimentConfig& config);

/// Evaluates a saved checkpoint; writes summary.csv and samples.csv.
RunSummary cmd_eval(const std::filesystem::path& checkpoint, const ExperimentConfig& config);

/// Aggregates the summary.csv of several run directories (same experiment,
/// any seed) into report.csv and report.txt under `out_dir`.
std::vector<AggregateRow> cmd_report(const std::vector<std::filesystem::path>& run_dirs,
                                     const std::filesystem::path& out_dir);

/// Regenerates the figures of every known CSV found in `dir`. Returns the files written.
std::vector<std::filesystem::path> cmd_plot(const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace topkgan

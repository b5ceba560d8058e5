#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "topkgan/mog.hpp"
#include "topkgan/nn.hpp"
#include "topkgan/optim.hpp"

namespace topkgan {

enum class Provenance { real, fake };

/// Per-sample critic logits. Higher means "judged more realistic".
struct CriticScores {
    Vector logits;
    Provenance provenance = Provenance::fake;

    std::size_t size() const { return static_cast<std::size_t>(logits.size()); }
};

/// Which batch elements feed the gradient.
enum class SelectionMode { top, bottom, full };

/// Which network's fake-sample loss terms are gated by the mask.
enum class UpdateTarget { G, D, G_and_D };

std::string to_string(SelectionMode m);
std::string to_string(UpdateTarget t);
SelectionMode selection_mode_from_string(const std::string& s);
UpdateTarget update_target_from_string(const std::string& s);

struct SampleMask {
    std::vector<std::uint8_t> bits;
    std::size_t k_effective = 0;

    std::size_t size() const { return bits.size(); }
    static SampleMask all(std::size_t n);
};

/// top: the k largest logits; bottom: the k smallest; full: everything.
/// Equal logits are ranked by batch index, lowest first, in both directions.
SampleMask topk_mask(const CriticScores& scores, std::size_t k, SelectionMode mode);

/// Geometric decay of k, floored at nu. k_real stays continuous; the mask
/// uses floor(k_real).
struct AnnealSchedule {
    double gamma = 0.99;
    std::size_t nu = 192;
    std::size_t decay_interval = 2000;
    double k_real = 256.0;
    SelectionMode mode = SelectionMode::top;

    std::size_t effective_k() const;
    void validate() const;
};

AnnealSchedule anneal_step(const AnnealSchedule& schedule);

double softplus(double x);
double sigmoid(double x);

struct CriticLoss {
    double loss = 0.0;
    Vector d_real;
    Vector d_fake;
};

/// Critic minimises mean softplus(-s_real) + mean softplus(s_fake), i.e. -V(D, G)
/// with D = sigmoid(logit). Gradients are with respect to each logit.
CriticLoss critic_loss_and_score_grads(const CriticScores& real, const CriticScores& fake);

/// As above, but the fake term averages only over samples kept by `fake_mask`.
CriticLoss critic_loss_and_score_grads(const CriticScores& real, const CriticScores& fake,
                                       const SampleMask& fake_mask);

struct GeneratorLoss {
    double loss = 0.0;
    Vector d_fake;
};

/// Non-saturating generator loss (1/k) * sum over kept samples of softplus(-s).
/// d_fake is exactly zero where the mask is zero.
GeneratorLoss generator_nonsat_loss_and_score_grads(const CriticScores& fake,
                                                    const SampleMask& mask);

struct TrainConfig {
    std::size_t batch_size = 256;
    std::size_t iterations = 100000;
    std::size_t prior_dim = 2;
    MlpConfig generator{2, 256, 2, 4};
    MlpConfig critic{2, 256, 1, 4};
    AdamConfig generator_optim;
    AdamConfig critic_optim;
    /// k_real is ignored here; runs always start at k = batch_size.
    AnnealSchedule schedule;
    UpdateTarget update_target = UpdateTarget::G;
    std::uint64_t seed = 1;

    void validate() const;
};

struct TrainState {
    MlpParams generator;
    MlpParams critic;
    AdamState generator_adam;
    AdamState critic_adam;
    double k_real = 0.0;
    std::uint64_t iteration = 0;
    std::mt19937_64 rng;

    bool operator==(const TrainState& other) const;
};

/// Seeds the rng from config.seed and initialises both networks from it.
TrainState train_state_init(const TrainConfig& config);

/// Raised when a loss or gradient becomes non-finite during training.
class TrainingDiverged : public NonFiniteError {
public:
    TrainingDiverged(std::uint64_t iteration, const std::string& what)
        : NonFiniteError(what), iteration_(iteration) {}
    std::uint64_t iteration() const { return iteration_; }

private:
    std::uint64_t iteration_;
};

struct StepStats {
    double loss_d = 0.0;
    double loss_g = 0.0;
    std::size_t k_effective = 0;
};

/// One critic update on the full real batch followed by one masked generator
/// update. The same generated batch G(z) is used for both halves.
StepStats train_step(TrainState& state, const Matrix& real_batch, const Matrix& z_batch,
                     const TrainConfig& config);

/// Draws a real batch then a prior batch from state.rng and calls train_step.
StepStats train_step(TrainState& state, const MogSpec& spec, const TrainConfig& config);

/// Generator samples for evaluation. The rng is derived from (seed, iteration)
/// so evaluation never perturbs the training stream.
Matrix generate_eval_samples(const TrainState& state, const TrainConfig& config,
                             std::size_t n_samples);

struct MetricRow {
    std::uint64_t iteration = 0;
    std::size_t k_effective = 0;
    double loss_g = 0.0;
    double loss_d = 0.0;
    double hq_frac = 0.0;
    double modes_frac = 0.0;
};

struct EvalSettings {
    std::size_t eval_interval = 10000;
    std::size_t eval_samples = 10000;
};

struct TrainRunResult {
    TrainState state;
    std::vector<MetricRow> log;
};

using StepObserver = std::function<void(const TrainState&, const MetricRow*)>;

/// Trains from `state` until config.iterations. A metric row is emitted at the
/// starting iteration when it is 0 and at every multiple of eval_interval
/// (and at the final iteration). The observer sees the state after every step.
TrainRunResult train_run(const TrainConfig& config, const MogSpec& spec,
                         const EvalSettings& eval, TrainState state,
                         const StepObserver& observer = {});

TrainRunResult train_run(const TrainConfig& config, const MogSpec& spec,
                         const EvalSettings& eval);

}  // namespace topkgan

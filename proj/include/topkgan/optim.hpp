#pragma once

#include <cstdint>
#include <stdexcept>

#include "topkgan/nn.hpp"

namespace topkgan {

/// Raised when training produces a NaN or infinity.
class NonFiniteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AdamConfig {
    double learning_rate = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    void validate() const;
    bool operator==(const AdamConfig&) const = default;
};

struct AdamState {
    LayerStack first_moment;
    LayerStack second_moment;
    std::uint64_t step = 0;

    bool operator==(const AdamState&) const = default;
};

AdamState adam_init(const LayerStack& params);

/// One bias-corrected Adam descent step, applied in place.
/// Throws NonFiniteError (leaving params and state untouched) if any gradient is not finite.
void adam_step(LayerStack& params, const GradientSet& grads, AdamState& state,
               const AdamConfig& config);

}  // namespace topkgan

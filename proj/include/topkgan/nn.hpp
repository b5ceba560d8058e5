#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace topkgan {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when a tensor or config does not have the shape an operation requires.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Activation { relu, identity };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

/// Fixed MLP family: `n_layers` affine layers, the first n_layers-1 of which
/// are hidden layers of width `hidden_dim`.
struct MlpConfig {
    std::size_t input_dim = 2;
    std::size_t hidden_dim = 256;
    std::size_t output_dim = 1;
    std::size_t n_layers = 4;
    Activation hidden_activation = Activation::relu;
    Activation output_activation = Activation::identity;

    void validate() const;

    /// Widths from input to output; size n_layers + 1.
    std::vector<std::size_t> layer_dims() const;

    bool operator==(const MlpConfig&) const = default;
};

/// One affine map y = W x + b with W stored out x in.
struct DenseLayer {
    Matrix weight;
    Vector bias;

    bool operator==(const DenseLayer& other) const;
};

/// A stack of dense layers. Shared storage layout for parameters, gradients
/// and optimizer moments.
struct LayerStack {
    std::vector<DenseLayer> layers;

    std::size_t parameter_count() const;
    bool all_finite() const;
    bool same_shape(const LayerStack& other) const;
    /// Widths from input to output, recovered from the weight shapes.
    std::vector<std::size_t> layer_dims() const;
    void set_zero();

    bool operator==(const LayerStack& other) const;
};

struct MlpParams : LayerStack {
    Activation hidden_activation = Activation::relu;
    Activation output_activation = Activation::identity;
};

struct GradientSet : LayerStack {
    static GradientSet zeros_like(const LayerStack& shape);
};

/// Cached per-layer values from a forward pass.
/// pre_activations[l] and activations[l] are B x dims[l+1]; input is B x dims[0].
struct ForwardTrace {
    Matrix input;
    std::vector<Matrix> pre_activations;
    std::vector<Matrix> activations;

    const Matrix& output() const { return activations.back(); }
    Eigen::Index batch_size() const { return input.rows(); }
};

/// Zero-mean uniform weights with half-width sqrt(1 / fan_in); zero biases.
MlpParams mlp_init(const MlpConfig& config, std::mt19937_64& rng);

/// Builds a zero-initialised parameter set with the config's shapes.
MlpParams mlp_zeros(const MlpConfig& config);

/// Runs the network on a B x input_dim batch.
ForwardTrace mlp_forward(const MlpParams& params, const Matrix& batch);

/// Gradient of sum_b <output_grads_b, output_b> with respect to every parameter.
/// Rows of `output_grads` that are zero contribute nothing.
GradientSet mlp_backward(const MlpParams& params, const ForwardTrace& trace,
                         const Matrix& output_grads);

/// Gradient of the same scalar with respect to the network input (B x input_dim).
/// Skips the weight gradients.
Matrix mlp_input_gradient(const MlpParams& params, const ForwardTrace& trace,
                          const Matrix& output_grads);

/// Both of the above from a single backward sweep.
struct BackwardResult {
    GradientSet grads;
    Matrix input_grad;
};
BackwardResult mlp_backward_with_input(const MlpParams& params, const ForwardTrace& trace,
                                       const Matrix& output_grads);

}  // namespace topkgan

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "topkgan/mog.hpp"
#include "topkgan/nn.hpp"

namespace topkgan {

/// A sample is high quality when it lies within this many sigmas of its nearest mode.
inline constexpr double kHighQualitySigmas = 4.0;
inline constexpr std::size_t kSigmaBins = 5;

/// Fractions of samples in [0,1), [1,2), [2,3), [3,4) sigma and [4, inf).
struct SigmaBinHistogram {
    std::array<double, kSigmaBins> fractions{};
    std::array<std::size_t, kSigmaBins> counts{};

    /// Index 0..4 for a distance expressed in sigma units.
    static std::size_t bin_of(double sigma_units);
};

struct GaussianSummary {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Identity();
};

double high_quality_fraction(const MogSpec& spec, const Matrix& samples);

/// Fraction of modes owning at least one high-quality sample.
double modes_recovered(const MogSpec& spec, const Matrix& samples);

SigmaBinHistogram sigma_bin_histogram(const MogSpec& spec, const Matrix& samples);

/// Two-sided critical value of the standard normal for the given significance.
double two_sided_z_critical(double significance);

/// Lloyd k-means with k-means++ seeding. Returns K x 2 centroids.
Matrix kmeans(const Matrix& points, std::size_t k, std::mt19937_64& rng,
              std::size_t max_iterations = 100);

/// NDB/K: bins come from k-means on the real samples; a bin counts as
/// statistically distinct when a pooled two-proportion z-test on its occupancy
/// rejects equality at `significance`.
double ndb_score(const Matrix& real_samples, const Matrix& gen_samples, std::size_t k,
                 double significance, std::mt19937_64& rng);

/// Mean and unbiased covariance of an n x 2 sample matrix (n >= 2).
GaussianSummary gaussian_summary(const Matrix& samples);

/// ||m_a - m_b||^2 + Tr(C_a + C_b - 2 (C_a C_b)^{1/2}) with the principal root.
double frechet_gaussian_distance(const GaussianSummary& a, const GaussianSummary& b);

/// <u, v> / (|u| |v|), or nullopt when either vector is zero.
std::optional<double> cosine_similarity(const Eigen::Vector2d& u, const Eigen::Vector2d& v);

}  // namespace topkgan

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "topkgan/nn.hpp"

namespace topkgan {

using Point2 = Eigen::Vector2d;

/// Grid mixture of isotropic 2-D Gaussians with equal weights.
struct MogSpec {
    std::vector<Point2> modes;
    double sigma = 0.05;
    std::size_t grid_side = 0;
    double extent = 2.0;
};

/// Builds a grid_side x grid_side lattice spanning [-extent, extent]^2.
/// n_modes must be a perfect square. Modes are ordered row by row (y outer, x inner).
MogSpec mog_grid(std::size_t n_modes, double extent = 2.0, double sigma = 0.05);

/// n x 2 draws: a uniformly chosen mode plus N(0, sigma^2 I) noise.
Matrix mog_sample(const MogSpec& spec, std::size_t n, std::mt19937_64& rng);

/// Same as mog_sample, also reporting which mode generated each row.
Matrix mog_sample(const MogSpec& spec, std::size_t n, std::mt19937_64& rng,
                  std::vector<std::size_t>& mode_of_row);

/// n x dim i.i.d. standard normal draws.
Matrix prior_sample(std::size_t dim, std::size_t n, std::mt19937_64& rng);

struct ModeOracleResult {
    std::size_t mode_index = 0;
    double distance = 0.0;
    /// Unit vector from the point toward the mode; zero when on_mode is set.
    Point2 direction = Point2::Zero();
    bool on_mode = false;
    double sigma_units = 0.0;
};

/// Exhaustive nearest-mode search. Ties go to the lowest mode index.
ModeOracleResult nearest_mode(const MogSpec& spec, const Point2& point);

}  // namespace topkgan

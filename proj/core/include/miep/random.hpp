#pragma once

#include <cstdint>
#include <random>

#include "miep/matrix.hpp"

namespace miep {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a base seed and a stream index,
/// so per-task streams do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
Scalar complex_gaussian(Rng& rng);
Vector random_vector(Rng& rng, Eigen::Index n);
Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

}  // namespace miep

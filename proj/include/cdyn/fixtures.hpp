#pragma once

#include <cstdint>
#include <random>

#include "cdyn/dyn_system.hpp"

namespace cdyn {

// Haar-distributed d x d unitary (QR of a complex Gaussian, phases fixed).
Mat random_unitary(Eigen::Index d, std::mt19937_64& rng);

// Complex Gaussian matrix.
Mat random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

struct RandomSystemOptions {
  std::size_t max_order = 16;
  Eigen::Index max_dim = 6;
  Eigen::Index min_dim = 1;
};

// Random system: G a product of one or two cyclic groups with |G| <= max_order,
// u_t = Q diag(<x_1,t>, ..., <x_d,t>) Q* for random characters x_j and a Haar
// unitary Q. A is either all of M_d or Q (M_{d1} + M_{d2}) Q*.
DynSystem random_system(std::uint64_t seed, const RandomSystemOptions& opts = {});

}  // namespace cdyn

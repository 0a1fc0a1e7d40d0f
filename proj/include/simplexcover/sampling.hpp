#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "simplexcover/polytope.hpp"

namespace simplexcover {

/// Uniform sampler on a simplex from sorted-uniform-spacings barycentric
/// weights. Floating point only; this feeds statistical estimators.
class SimplexSampler {
 public:
  SimplexSampler(const VPolytope& simplex, std::uint64_t seed);

  std::vector<double> operator()();

  /// Draws the next sample as its spacing cut points 0 = c_0 <= ... <= c_{n+1} = 1;
  /// the barycentric weights are c_{k+1} - c_k. Consumes the same random stream
  /// as operator().
  const std::vector<double>& next_cuts();

 private:
  std::vector<std::vector<double>> vertices_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::vector<double> cuts_;
};

/// One sample for a given seed.
std::vector<double> sample_uniform_simplex(const VPolytope& simplex, std::uint64_t seed);

}  // namespace simplexcover

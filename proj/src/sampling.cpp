#include "simplexcover/sampling.hpp"

#include <algorithm>

namespace simplexcover {

SimplexSampler::SimplexSampler(const VPolytope& simplex, std::uint64_t seed) : rng_(seed) {
  if (!simplex.is_simplex()) throw DegenerateInput("sampler requires a full-dimensional simplex");
  for (const auto& v : simplex.vertices()) vertices_.push_back(v.to_doubles());
  cuts_.resize(simplex.dim() + 2);
}

const std::vector<double>& SimplexSampler::next_cuts() {
  const std::size_t n = vertices_.size() - 1;
  cuts_.front() = 0.0;
  cuts_.back() = 1.0;
  for (std::size_t i = 1; i <= n; ++i) cuts_[i] = unit_(rng_);
  std::sort(cuts_.begin() + 1, cuts_.begin() + static_cast<std::ptrdiff_t>(n) + 1);
  return cuts_;
}

std::vector<double> SimplexSampler::operator()() {
  const std::size_t n = vertices_.size() - 1;
  next_cuts();
  std::vector<double> x(n, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = cuts_[k + 1] - cuts_[k];
    for (std::size_t i = 0; i < n; ++i) x[i] += w * vertices_[k][i];
  }
  return x;
}

std::vector<double> sample_uniform_simplex(const VPolytope& simplex, std::uint64_t seed) {
  SimplexSampler s(simplex, seed);
  return s();
}

}  // namespace simplexcover

#include "simplexcover/lattice.hpp"

#include <stdexcept>

namespace simplexcover {

Lattice::Lattice(RationalMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() == 0) throw DegenerateInput("lattice basis must be square");
  auto inv = inverse(basis_);
  if (!inv) throw DegenerateInput("lattice basis is singular");
  inverse_ = std::move(*inv);
  det_ = abs(determinant(basis_));
}

RationalPoint Lattice::point(const IntegerPoint& coefficients) const {
  if (coefficients.size() != dim()) throw DimensionMismatch("lattice coefficient dimension");
  RationalPoint c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = Rational(static_cast<long>(coefficients[i]));
  return multiply(c, basis_);
}

bool Lattice::is_member(const RationalPoint& x) const {
  for (const auto& c : coordinates(x))
    if (c.get_den() != 1) return false;
  return true;
}

Lattice Lattice::scaled(const Rational& s) const {
  RationalMatrix b = basis_;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) *= s;
  return Lattice(std::move(b));
}

std::vector<LatticeHit> lattice_points_in(const HPolytope& h, const Lattice& lattice) {
  const std::size_t n = lattice.dim();
  if (h.dim() != n) throw DimensionMismatch("polytope and lattice dimensions differ");
  std::vector<LatticeHit> hits;
  if (h.vertices().empty()) return hits;

  std::vector<BigInt> lo(n), hi(n);
  bool first = true;
  for (const auto& v : h.vertices()) {
    RationalPoint c = lattice.coordinates(v);
    for (std::size_t i = 0; i < n; ++i) {
      BigInt f = floor(c[i]), g = ceil(c[i]);
      if (first || f < lo[i]) lo[i] = f;
      if (first || g > hi[i]) hi[i] = g;
    }
    first = false;
  }
  BigInt count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= hi[i] - lo[i] + 1;
  if (count > 50'000'000) throw std::runtime_error("lattice point scan box too large: " + count.get_str());

  IntegerPoint c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = lo[i].get_si();
  while (true) {
    RationalPoint x = lattice.point(c);
    if (contains(h, x)) hits.push_back({c, std::move(x)});
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (c[i] < hi[i].get_si()) {
        ++c[i];
        break;
      }
      c[i] = lo[i].get_si();
    }
    if (i == n) break;
  }
  return hits;
}

}  // namespace simplexcover

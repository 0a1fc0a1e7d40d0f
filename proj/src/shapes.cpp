#include "simplexcover/shapes.hpp"

namespace simplexcover {

VPolytope standard_simplex(std::size_t n) {
  std::vector<RationalPoint> pts{RationalPoint::zero(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(RationalPoint::unit(n, i));
  return convex_hull(std::move(pts));
}

VPolytope box(const RationalPoint& lo, const RationalPoint& hi) {
  const std::size_t n = lo.dim();
  if (hi.dim() != n) throw DimensionMismatch("box corner dimensions differ");
  std::vector<RationalPoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalPoint p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1U ? hi[i] : lo[i];
    pts.push_back(std::move(p));
  }
  return convex_hull(std::move(pts));
}

VPolytope unit_cube(std::size_t n) {
  RationalPoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = Rational(-1, 2);
    hi[i] = Rational(1, 2);
  }
  return box(lo, hi);
}

VPolytope cross_polytope(std::size_t n, const Rational& radius) {
  std::vector<RationalPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(RationalPoint::unit(n, i) * radius);
    pts.push_back(RationalPoint::unit(n, i) * Rational(-radius));
  }
  return convex_hull(std::move(pts));
}

}  // namespace simplexcover

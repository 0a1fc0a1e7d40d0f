#pragma once

#include "simplexcover/polytope.hpp"

namespace simplexcover {

/// conv{o, e_1, ..., e_n}.
VPolytope standard_simplex(std::size_t n);

/// The cube {x : |x_i| <= 1/2}.
VPolytope unit_cube(std::size_t n);

/// Axis-aligned box [lo_1, hi_1] x ... x [lo_n, hi_n].
VPolytope box(const RationalPoint& lo, const RationalPoint& hi);

/// conv{+-r e_i}.
VPolytope cross_polytope(std::size_t n, const Rational& radius);

}  // namespace simplexcover

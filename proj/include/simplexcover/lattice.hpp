#pragma once

#include <cstdint>
#include <vector>

#include "simplexcover/linalg.hpp"
#include "simplexcover/polytope.hpp"

namespace simplexcover {

using IntegerPoint = std::vector<std::int64_t>;

/// Integer span of the rows of a nonsingular rational basis.
class Lattice {
 public:
  Lattice() = default;
  /// Throws DegenerateInput for a singular or non-square basis.
  explicit Lattice(RationalMatrix basis);

  static Lattice integer(std::size_t dim) { return Lattice(RationalMatrix::identity(dim)); }

  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  /// |det(basis)|, always positive.
  const Rational& det() const { return det_; }
  const RationalMatrix& inverse_basis() const { return inverse_; }

  RationalPoint point(const IntegerPoint& coefficients) const;
  /// Coefficients c with x = c * basis (rational unless x is a lattice point).
  RationalPoint coordinates(const RationalPoint& x) const { return multiply(x, inverse_); }
  bool is_member(const RationalPoint& x) const;

  Lattice scaled(const Rational& s) const;

 private:
  RationalMatrix basis_;
  RationalMatrix inverse_;
  Rational det_;
};

struct LatticeHit {
  IntegerPoint coefficients;
  RationalPoint point;
};

/// Every lattice point in the closed polytope, by scanning the integer box
/// that bounds the lattice coordinates of its vertices.
std::vector<LatticeHit> lattice_points_in(const HPolytope& h, const Lattice& lattice);

}  // namespace simplexcover

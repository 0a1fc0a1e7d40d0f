#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplexcover/rational.hpp"

namespace simplexcover::detail {

using IntVector = std::vector<BigInt>;

/// Divides by the gcd of the entries; leaves the zero vector unchanged.
void make_primitive(IntVector& v);

/// Clears denominators of a rational vector and makes the result primitive.
IntVector to_primitive_integer(const std::vector<Rational>& v);

/// Extreme rays of the cone {x in Q^d : row . x <= 0 for every row}, computed
/// by the double description method with the combinatorial adjacency test.
/// Rays are primitive integer vectors. Returns nullopt when the rows have
/// rank < d, i.e. the cone has a nontrivial lineality space.
std::optional<std::vector<IntVector>> extreme_rays(const std::vector<IntVector>& rows, std::size_t d);

}  // namespace simplexcover::detail

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "simplexcover/audit.hpp"
#include "simplexcover/polytope.hpp"

namespace simplexcover {

/// vol(mu K - nu K) / vol(K) = sum_i coefficients[i] mu^i nu^(n-i).
struct RatioPolynomial {
  std::size_t n = 0;
  std::vector<Rational> coefficients;

  Rational operator()(const Rational& mu, const Rational& nu) const;
};

/// mu K + (-nu) K. Throws std::invalid_argument unless mu, nu > 0.
VPolytope general_difference_body(const VPolytope& k, const Rational& mu, const Rational& nu);

/// K - K.
VPolytope difference_body(const VPolytope& k);

/// sum_i C(n,i)^2 mu^i nu^(n-i).
Rational rs_ratio_formula(std::size_t n, const Rational& mu, const Rational& nu);

/// Coefficients C(n,i)^2.
RatioPolynomial simplex_ratio_polynomial(std::size_t n);

/// Pair of complementary coordinate faces of the standard simplex, scaled:
/// face = mu conv(o, e_k : k in S), coface = -nu conv(o, e_k : k not in S).
struct SimplexFacePair {
  std::size_t i = 0;  // |S|
  std::size_t j = 0;  // 1-based rank of S among the i-subsets, lexicographic
  std::vector<std::size_t> subset;
  VPolytope face;
  VPolytope coface;
};

struct DecompositionPiece {
  SimplexFacePair pair;
  VPolytope body;
  Rational claimed_volume;
};

/// The 2^n face-pair pieces of mu T_n - nu T_n, generated from coordinate subsets.
std::vector<DecompositionPiece> simplex_decomposition(std::size_t n, const Rational& mu, const Rational& nu);

/// Checks containment in `body`, pairwise zero-volume overlaps, the claimed
/// piece volumes and that the piece volumes add up to vol(body).
AuditReport verify_decomposition(const std::vector<DecompositionPiece>& pieces, const VPolytope& body);

/// W_0..W_n with vol(K - lambda K) = sum_i C(n,i) W_i lambda^i, from exact
/// volumes at lambda = first_node, ..., first_node + n.
std::vector<Rational> mixed_volume_profile(const VPolytope& k, const Rational& first_node = 1);

/// Ratio polynomial of K recovered from its mixed-volume profile.
RatioPolynomial ratio_polynomial(const VPolytope& k);

std::vector<std::pair<Rational, Rational>> default_bound_grid();

/// Brunn-Minkowski, Rogers-Shephard and the simplex-ratio probe over a grid of (mu, nu).
AuditReport bound_audit(const VPolytope& k,
                        const std::vector<std::pair<Rational, Rational>>& grid = default_bound_grid());

/// Integers in sum_i C(n,i)^2 2^i <= 2^n C(n, n/2)^2 <= 2^(3n).
struct TwoToOneChain {
  BigInt exact;
  BigInt middle;
  BigInt power;
};

TwoToOneChain two_to_one_chain(std::size_t n);

}  // namespace simplexcover

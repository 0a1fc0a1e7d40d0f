#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "simplexcover/audit.hpp"
#include "simplexcover/lattice_cover.hpp"

namespace simplexcover {

using FloatMatrix = std::vector<std::vector<double>>;

struct SearchConfig {
  /// 0 takes the dimension from the body.
  std::size_t dim = 0;
  std::size_t restarts = 8;
  std::size_t iterations = 300;
  std::uint64_t seed = 1;
  unsigned depth = 12;
  /// Width of the certified scale bracket, relative to the scale itself.
  Rational scale_tolerance{1, 10000};
  std::int64_t max_denominator = 1'000'000;
  /// "nelder-mead" or "anneal".
  std::string method = "nelder-mead";
  double initial_step = 0.2;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double anneal_temperature = 0.05;
  double anneal_cooling = 0.995;
  /// Relative accuracy of the floating-point covering radius.
  double search_tolerance = 1e-5;
  unsigned workers = 1;
};

struct HistoryEntry {
  std::size_t iteration = 0;
  std::size_t restart = 0;
  double value = 0;
  double best = 0;
};

struct SearchResult {
  /// Basis of a lattice that K itself covers at best_density.
  RationalMatrix best_basis;
  Rational best_density;
  CoveringCertificate certificate;
  std::vector<HistoryEntry> history;
  std::size_t best_restart = 0;
  /// Certified bracket of the covering scale for the rationalized search basis.
  Rational t_lo, t_hi;
  AuditReport audits;
};

/// Floating-point covering radius of a fixed body: the least t with
/// t K + L covering, by branch and bound over the fundamental cell.
class CoveringRadius {
 public:
  explicit CoveringRadius(const VPolytope& k);

  /// +infinity for (nearly) singular bases.
  double operator()(const FloatMatrix& basis, double rel_tol = 1e-5) const;
  double volume() const { return volume_; }
  std::size_t dim() const { return n_; }

 private:
  double radius(const FloatMatrix& basis, double t_max, double rel_tol, bool& complete) const;

  std::size_t n_;
  double volume_;
  std::vector<std::vector<double>> normals_;  // a_F / (b_F - a_F . centroid)
  std::vector<std::vector<double>> centered_vertices_;
};

/// Floating-point covering density vol(t* K) / det for the search.
double search_objective(const VPolytope& k, const FloatMatrix& basis, double rel_tol = 1e-5);

/// Certified density of the rationalized basis: vol(K) t_hi^n / det, with
/// t_hi from min_cover_scale. +infinity when singular or undecided.
double objective(const VPolytope& k, const FloatMatrix& basis, const SearchConfig& cfg = {});

/// Entry-wise continued-fraction rationalization.
RationalMatrix rationalize(const FloatMatrix& basis, std::int64_t max_denominator);

/// Pairwise size reduction b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j until no row shortens.
RationalMatrix unimodular_reduce(const RationalMatrix& basis);

/// Restarted derivative-free search over lattice bases, each optimum
/// certified exactly. Throws NoCoveringFound if no restart certifies.
SearchResult optimize_lattice(const VPolytope& k, const SearchConfig& cfg);

}  // namespace simplexcover

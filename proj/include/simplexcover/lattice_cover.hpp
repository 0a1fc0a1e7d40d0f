#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexcover/audit.hpp"
#include "simplexcover/lattice.hpp"
#include "simplexcover/polytope.hpp"
#include "simplexcover/surd.hpp"

namespace simplexcover {

/// vol(K) / det(L).
Rational density(const VPolytope& k, const Lattice& lattice);

enum class Verdict { Covered, UncoveredWitness, Inconclusive, VolumeDeficit };

std::string to_string(Verdict v);

/// Dyadic box [corner / 2^depth, (corner + 1) / 2^depth] in lattice coordinates.
struct OpenBox {
  IntegerPoint corner;
  unsigned depth = 0;
};

struct CoveringCertificate {
  Verdict verdict = Verdict::Inconclusive;
  /// Set for UncoveredWitness, and for VolumeDeficit when the search found one.
  std::optional<RationalPoint> witness;
  unsigned depth_used = 0;
  /// Lattice coefficients of every u with (K + u) meeting the closed fundamental cell.
  std::vector<IntegerPoint> candidate_translates;
  std::vector<OpenBox> open_boxes;
  std::size_t boxes_accepted = 0;
  /// Leaf boxes settled by exact cell splitting instead of a single translate.
  std::size_t cells_resolved = 0;

  bool covered() const { return verdict == Verdict::Covered; }
};

struct CoveringOptions {
  unsigned max_depth = 12;
  /// Cell budget for the exact split of one leaf box.
  std::size_t leaf_cell_budget = 4096;
  /// Boxes visited before the search gives up as Inconclusive.
  std::size_t box_budget = 20'000'000;
  /// Keep searching for an uncovered point after a volume deficit is found.
  bool witness_on_deficit = true;
};

/// Certifies whether K + L covers space, by subdividing the fundamental cell
/// of L. Boxes inside a single candidate translate are accepted. A box at
/// max_depth is split exactly along the candidates' facet hyperplanes. A
/// volume deficit (vol K < det L) is reported as VolumeDeficit together with
/// an uncovered point whenever the search finds one.
CoveringCertificate is_covering(const VPolytope& k, const Lattice& lattice, const CoveringOptions& options = {});
CoveringCertificate is_covering(const VPolytope& k, const Lattice& lattice, unsigned max_depth);

/// True when x lies in no translate K + u, u in L.
bool is_uncovered(const VPolytope& k, const Lattice& lattice, const RationalPoint& x);

/// Number of nonzero u in L with K and K + u meeting (closed).
std::size_t star_number(const VPolytope& k, const Lattice& lattice);

/// The same count by intersecting K with every translate in a bounding box.
std::size_t star_number_bruteforce(const VPolytope& k, const Lattice& lattice);

/// Neighbors u != 0 with K and K + u meeting, as lattice hits.
std::vector<LatticeHit> star_neighbors(const VPolytope& k, const Lattice& lattice);

/// vol(2K - K) / vol(K) * density >= star number. Throws NotACovering unless
/// `certificate` (or a fresh verification) says Covered.
AuditReport hadwiger_audit(const VPolytope& k, const Lattice& lattice, const CoveringCertificate& certificate);
AuditReport hadwiger_audit(const VPolytope& k, const Lattice& lattice, unsigned max_depth = 12);

struct MultiplicityEstimate {
  double mean_inverse_multiplicity = 0;
  /// Standard error of estimated_det.
  double std_error = 0;
  std::size_t samples = 0;
  double estimated_det = 0;
  /// histogram[j] = number of samples covered by exactly j translates.
  std::vector<std::size_t> histogram;
};

/// Monte-Carlo estimate of det L = vol(K) E[1/j(x)] for x uniform in the
/// simplex K. Sample points are rational and multiplicities exact. Throws
/// ZeroMultiplicity if a sample is covered by no translate.
MultiplicityEstimate multiplicity_density_estimate(const VPolytope& k, const Lattice& lattice, std::size_t samples,
                                                   std::uint64_t seed, unsigned workers = 1);

/// |estimated_det - det L| <= sigmas * std_error, and std_error <= rel_error * det L.
AuditReport lemma3_audit(const Lattice& lattice, const MultiplicityEstimate& estimate, double sigmas = 4,
                         double rel_error = 1e-2);

struct Homothety {
  Rational lambda;
  RationalPoint y;
};

/// (lambda, y) with K n (K + x) = lambda K + y, if that holds exactly.
std::optional<Homothety> homothety_check(const VPolytope& k, const RationalPoint& x);

/// Sum over the facets F of T of the (n-1)-measure of F n (T + u).
SurdSum boundary_overlap(const VPolytope& t, const RationalPoint& u);

/// Sum over facets F of |F n (T + u)| / |F|. Invariant under affine maps, so
/// for a simplex it is the overlap measured in units of one facet of the
/// regular simplex.
Rational boundary_overlap_fraction(const VPolytope& t, const RationalPoint& u);

/// Case analysis of the lower bound 1 + 2^-(3n+7) on a certified covering of a simplex.
AuditReport theorem2_audit(const VPolytope& t, const Lattice& lattice, const CoveringCertificate& certificate);
AuditReport theorem2_audit(const VPolytope& t, const Lattice& lattice, unsigned max_depth = 12);

/// 1 + 2^-(3n+7).
Rational theorem2_bound(std::size_t n);

struct ScaleBracket {
  Rational t_lo;
  Rational t_hi;
  CoveringCertificate lower;  // not covering at t_lo, or default when t_lo == 0
  CoveringCertificate upper;  // Covered at t_hi
};

/// Brackets min{t : tK + L covers} to within tol. The optional hint is a
/// guess for t*, used to seed the bracket. Throws DepthExhausted when the
/// verifier cannot decide a probe.
ScaleBracket min_cover_scale(const VPolytope& k, const Lattice& lattice, const Rational& tol,
                             const CoveringOptions& options = {}, std::optional<Rational> hint = std::nullopt);

}  // namespace simplexcover

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "simplexcover/errors.hpp"
#include "simplexcover/linalg.hpp"
#include "simplexcover/surd.hpp"

namespace simplexcover {

/// Closed halfspace normal . x <= offset.
struct Halfspace {
  RationalPoint normal;
  Rational offset;

  bool contains(const RationalPoint& x) const { return dot(normal, x) <= offset; }
  /// offset - normal . x; nonnegative inside, zero on the hyperplane.
  Rational slack(const RationalPoint& x) const { return offset - dot(normal, x); }
  Halfspace translated(const RationalPoint& v) const { return {normal, offset + dot(normal, v)}; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Convex polytope given by its extreme points.
///
/// Vertex lists are always irredundant and sorted lexicographically. When the
/// polytope is full-dimensional its facets (primitive integer normals) and the
/// vertex/facet incidences are kept alongside the vertices.
class VPolytope {
 public:
  VPolytope() = default;

  /// Convex hull of an arbitrary nonempty point set, of any affine dimension.
  static VPolytope of_points(std::vector<RationalPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_ && dim_ > 0; }
  bool is_simplex() const { return full_dimensional() && vertices_.size() == dim_ + 1; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }

  /// Facet inequalities; empty unless full-dimensional.
  const std::vector<Halfspace>& facets() const;
  /// Indices into vertices() of the vertices on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const;

  friend bool operator==(const VPolytope& a, const VPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  struct FacetData {
    std::vector<Halfspace> facets;
    std::vector<std::vector<std::size_t>> incidence;
  };

  static void sort_facets(FacetData& data);

  friend VPolytope convex_hull(std::vector<RationalPoint> points);
  friend VPolytope scale(const VPolytope& p, const Rational& s);
  friend VPolytope translate(const VPolytope& p, const RationalPoint& v);

  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::shared_ptr<const FacetData> facet_data_;
};

/// Convex polytope given by halfspaces; bounded by construction.
class HPolytope {
 public:
  HPolytope() = default;

  /// Validates boundedness by enumerating vertices. Throws UnboundedInput if
  /// the halfspaces do not bound and DegenerateInput if they are infeasible.
  static HPolytope from_halfspaces(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }

  HPolytope translated(const RationalPoint& v) const;

 private:
  friend HPolytope to_hrep(const VPolytope& p);

  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<RationalPoint> vertices_;
};

/// Full-dimensional convex hull. Throws DegenerateInput when the affine hull
/// of the points is lower-dimensional.
VPolytope convex_hull(std::vector<RationalPoint> points);

/// Exact n-volume by a pulling (fan) triangulation from the first vertex.
Rational volume(const VPolytope& p);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// Image under x -> s x. s = 0 gives the single-point polytope {o}.
VPolytope scale(const VPolytope& p, const Rational& s);
VPolytope translate(const VPolytope& p, const RationalPoint& v);

HPolytope to_hrep(const VPolytope& p);
VPolytope to_vrep(const HPolytope& h);

/// Vertices of {x : h . x <= b for all h}; nullopt when infeasible.
/// Throws UnboundedInput when feasible but unbounded.
std::optional<std::vector<RationalPoint>> enumerate_vertices(std::size_t dim,
                                                             std::span<const Halfspace> halfspaces);

/// Exact intersection; nullopt when empty. Lower-dimensional intersections
/// are returned with their affine dimension.
std::optional<VPolytope> intersect(const HPolytope& a, const HPolytope& b);

/// Closed containment.
bool contains(const HPolytope& h, const RationalPoint& x);

struct FacetMeasure {
  Halfspace facet;
  std::vector<std::size_t> vertex_indices;
  Surd measure;
};

/// (n-1)-dimensional measure of every facet.
std::vector<FacetMeasure> facet_measure(const VPolytope& p);

/// (n-1)-measure of the convex hull of `points`, all lying on the hyperplane
/// with primitive integer normal `normal`. Zero if the hull is lower-dimensional.
Surd hyperplane_measure(std::span<const RationalPoint> points, const RationalPoint& normal);

/// Same measure in coordinates projected along the axis `hyperplane_measure`
/// uses; it differs from the true measure by a factor fixed by the hyperplane,
/// so ratios of two such values within one hyperplane are exact.
Rational projected_measure(std::span<const RationalPoint> points, const RationalPoint& normal);

}  // namespace simplexcover

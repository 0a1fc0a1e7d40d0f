#include "simplexcover/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "double_description.hpp"

namespace simplexcover {

namespace {

void require_same_dim(std::span<const RationalPoint> points, std::size_t dim) {
  for (const auto& p : points)
    if (p.dim() != dim) throw DimensionMismatch("points of mixed dimension");
}

std::vector<RationalPoint> sorted_unique(std::vector<RationalPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// Columns on which the affine hull of `points` projects injectively.
std::vector<std::size_t> pivot_columns(std::span<const RationalPoint> points) {
  const std::size_t n = points.front().dim();
  RationalMatrix m(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) m.set_row(i - 1, points[i] - points.front());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t q = r + 1; q < m.rows(); ++q) {
      if (m(q, c) == 0) continue;
      Rational f = m(q, c) / m(r, c);
      for (std::size_t k = c; k < n; ++k) m(q, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalPoint project(const RationalPoint& p, std::span<const std::size_t> axes) {
  RationalPoint out(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) out[i] = p[axes[i]];
  return out;
}

RationalPoint drop_axis(const RationalPoint& p, std::size_t axis) {
  RationalPoint out(p.dim() - 1);
  for (std::size_t i = 0, j = 0; i < p.dim(); ++i)
    if (i != axis) out[j++] = p[i];
  return out;
}

std::vector<RationalPoint> gather(const std::vector<RationalPoint>& all, std::span<const std::size_t> idx) {
  std::vector<RationalPoint> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

Rational simplex_volume(const std::vector<RationalPoint>& verts, std::span<const std::size_t> simplex) {
  const std::size_t n = simplex.size() - 1;
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m.set_row(i - 1, verts[simplex[i]] - verts[simplex[0]]);
  Rational d = determinant(std::move(m));
  return abs(d) / Rational(factorial(static_cast<unsigned>(n)));
}

// Pulling triangulation of the k-face `face` (sorted vertex indices): cone
// from its first vertex over the triangulations of the facets of `face` that
// avoid it.
void triangulate_face(const VPolytope& p, const std::vector<std::size_t>& face, std::size_t k,
                      std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == k + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  const auto& vertices = p.vertices();
  for (const auto& facet : p.facet_vertices()) {
    std::vector<std::size_t> common;
    std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(common));
    if (common.size() < k) continue;
    if (std::binary_search(common.begin(), common.end(), apex)) continue;
    if (common == face) continue;
    auto pts = gather(vertices, common);
    if (affine_rank(pts) != k - 1) continue;
    subfaces.insert(std::move(common));
  }
  for (const auto& sub : subfaces) {
    std::vector<std::vector<std::size_t>> pieces;
    triangulate_face(p, sub, k - 1, pieces);
    for (auto& s : pieces) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

void VPolytope::sort_facets(FacetData& data) {
  std::vector<std::size_t> order(data.facets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = data.facets[a];
    const auto& y = data.facets[b];
    return x.normal < y.normal || (x.normal == y.normal && x.offset < y.offset);
  });
  FacetData sorted;
  for (auto i : order) {
    sorted.facets.push_back(std::move(data.facets[i]));
    sorted.incidence.push_back(std::move(data.incidence[i]));
  }
  data = std::move(sorted);
}

const std::vector<Halfspace>& VPolytope::facets() const {
  static const std::vector<Halfspace> none;
  return facet_data_ ? facet_data_->facets : none;
}

const std::vector<std::vector<std::size_t>>& VPolytope::facet_vertices() const {
  static const std::vector<std::vector<std::size_t>> none;
  return facet_data_ ? facet_data_->incidence : none;
}

VPolytope VPolytope::of_points(std::vector<RationalPoint> points) {
  if (points.empty()) throw DegenerateInput("polytope needs at least one point");
  const std::size_t n = points.front().dim();
  require_same_dim(points, n);
  points = sorted_unique(std::move(points));
  const std::size_t k = affine_rank(points);
  if (k == n && n > 0) return convex_hull(std::move(points));

  VPolytope out;
  out.dim_ = n;
  out.affine_dim_ = k;
  if (k == 0) {
    out.vertices_ = {points.front()};
    return out;
  }
  const auto axes = pivot_columns(points);
  std::vector<RationalPoint> projected;
  projected.reserve(points.size());
  for (const auto& p : points) projected.push_back(project(p, axes));
  VPolytope low = convex_hull(projected);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::binary_search(low.vertices_.begin(), low.vertices_.end(), projected[i])) out.vertices_.push_back(points[i]);
  return out;
}

VPolytope convex_hull(std::vector<RationalPoint> points) {
  if (points.empty()) throw DegenerateInput("convex hull of no points");
  const std::size_t n = points.front().dim();
  if (n == 0) throw DegenerateInput("zero-dimensional ambient space");
  require_same_dim(points, n);
  points = sorted_unique(std::move(points));
  if (affine_rank(points) < n) {
    throw DegenerateInput("points span an affine subspace of dimension " + std::to_string(affine_rank(points)) +
                          " < " + std::to_string(n));
  }

  // Facet inequalities a.x <= b are the extreme rays (a, b) of the cone
  // {(a, b) : a.v - b <= 0 for every input point v} with a != 0.
  std::vector<detail::IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> r(p.begin(), p.end());
    r.push_back(-1);
    rows.push_back(detail::to_primitive_integer(r));
  }
  auto rays = detail::extreme_rays(rows, n + 1);
  if (!rays) throw DegenerateInput("facet cone is not pointed");

  std::vector<Halfspace> facets;
  for (auto& ray : *rays) {
    bool zero_normal = true;
    for (std::size_t i = 0; i < n; ++i) zero_normal = zero_normal && ray[i] == 0;
    if (zero_normal) continue;
    detail::IntVector a(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n));
    BigInt g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    RationalPoint normal(n);
    for (std::size_t i = 0; i < n; ++i) normal[i] = Rational(a[i] / g);
    Rational offset(ray[n], g);
    offset.canonicalize();
    facets.push_back({std::move(normal), std::move(offset)});
  }

  // A point is a vertex iff the normals of the facets through it span Q^n.
  std::vector<RationalPoint> vertices;
  std::vector<std::vector<std::size_t>> tight_facets;
  for (const auto& p : points) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (facets[f].slack(p) == 0) tight.push_back(f);
    if (tight.size() < n) continue;
    RationalMatrix normals(tight.size(), n);
    for (std::size_t i = 0; i < tight.size(); ++i) normals.set_row(i, facets[tight[i]].normal);
    if (rank(std::move(normals)) < n) continue;
    vertices.push_back(p);
    tight_facets.push_back(std::move(tight));
  }

  auto data = std::make_shared<VPolytope::FacetData>();
  data->facets = std::move(facets);
  data->incidence.assign(data->facets.size(), {});
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (auto f : tight_facets[v]) data->incidence[f].push_back(v);
  VPolytope::sort_facets(*data);

  VPolytope out;
  out.dim_ = n;
  out.affine_dim_ = n;
  out.vertices_ = std::move(vertices);
  out.facet_data_ = std::move(data);
  return out;
}

Rational volume(const VPolytope& p) {
  if (!p.full_dimensional()) {
    throw DegenerateInput("volume of a polytope of affine dimension " + std::to_string(p.affine_dim()) + " in R^" +
                          std::to_string(p.dim()));
  }
  const std::size_t n = p.dim();
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<std::vector<std::size_t>> simplices;
  if (all.size() == n + 1) {
    simplices.push_back(all);
  } else {
    const std::size_t apex = 0;
    for (const auto& facet : p.facet_vertices()) {
      if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
      std::vector<std::vector<std::size_t>> pieces;
      triangulate_face(p, facet, n - 1, pieces);
      for (auto& s : pieces) {
        s.insert(s.begin(), apex);
        simplices.push_back(std::move(s));
      }
    }
  }
  Rational total = 0;
  for (const auto& s : simplices) total += simplex_volume(p.vertices(), s);
  return total;
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("Minkowski sum of polytopes in different dimensions");
  std::vector<RationalPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return VPolytope::of_points(std::move(sums));
}

VPolytope scale(const VPolytope& p, const Rational& s) {
  VPolytope out;
  out.dim_ = p.dim_;
  if (s == 0) {
    out.affine_dim_ = 0;
    out.vertices_ = {RationalPoint::zero(p.dim_)};
    return out;
  }
  out.affine_dim_ = p.affine_dim_;
  const std::size_t nv = p.vertices_.size();
  out.vertices_.reserve(nv);
  for (const auto& v : p.vertices_) out.vertices_.push_back(v * s);
  const bool reflect = s < 0;
  // Negation reverses lexicographic order.
  if (reflect) std::reverse(out.vertices_.begin(), out.vertices_.end());
  if (p.facet_data_) {
    auto data = std::make_shared<VPolytope::FacetData>();
    const Rational mag = abs(s);
    for (std::size_t f = 0; f < p.facet_data_->facets.size(); ++f) {
      const auto& h = p.facet_data_->facets[f];
      data->facets.push_back({reflect ? -h.normal : h.normal, h.offset * mag});
      std::vector<std::size_t> inc = p.facet_data_->incidence[f];
      if (reflect) {
        for (auto& i : inc) i = nv - 1 - i;
        std::sort(inc.begin(), inc.end());
      }
      data->incidence.push_back(std::move(inc));
    }
    VPolytope::sort_facets(*data);
    out.facet_data_ = std::move(data);
  }
  return out;
}

VPolytope translate(const VPolytope& p, const RationalPoint& v) {
  if (v.dim() != p.dim()) throw DimensionMismatch("translation vector dimension");
  VPolytope out = p;
  for (auto& x : out.vertices_) x += v;
  if (p.facet_data_) {
    auto data = std::make_shared<VPolytope::FacetData>(*p.facet_data_);
    for (auto& h : data->facets) h = h.translated(v);
    out.facet_data_ = std::move(data);
  }
  return out;
}

HPolytope to_hrep(const VPolytope& p) {
  if (!p.full_dimensional()) throw DegenerateInput("halfspace form requires a full-dimensional polytope");
  HPolytope h;
  h.dim_ = p.dim();
  h.halfspaces_ = p.facets();
  h.vertices_ = p.vertices();
  return h;
}

VPolytope to_vrep(const HPolytope& h) { return VPolytope::of_points(h.vertices()); }

std::optional<std::vector<RationalPoint>> enumerate_vertices(std::size_t dim, std::span<const Halfspace> halfspaces) {
  for (const auto& h : halfspaces)
    if (h.normal.dim() != dim) throw DimensionMismatch("halfspace normal dimension");

  auto homogenize = [](const std::vector<Rational>& a, const Rational& b) {
    std::vector<Rational> r = a;
    r.push_back(-b);
    return detail::to_primitive_integer(r);
  };

  std::vector<detail::IntVector> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) rows.push_back(homogenize(h.normal.coords(), h.offset));
  {
    detail::IntVector t_nonneg(dim + 1, BigInt(0));
    t_nonneg[dim] = -1;
    rows.push_back(std::move(t_nonneg));
  }

  auto rays = detail::extreme_rays(rows, dim + 1);
  if (!rays) {
    // Nontrivial lineality: restrict to the row space of the normals. The set
    // is then either empty or contains a line.
    std::vector<RationalPoint> normals;
    for (const auto& h : halfspaces) normals.push_back(h.normal);
    std::vector<RationalPoint> basis;
    for (const auto& a : normals) {
      auto trial = basis;
      trial.push_back(a);
      if (rank(RationalMatrix::from_rows(trial)) == trial.size()) basis = std::move(trial);
    }
    if (basis.empty()) {
      for (const auto& h : halfspaces)
        if (h.offset < 0) return std::nullopt;
      throw UnboundedInput("halfspaces do not bound: no constraining normals");
    }
    std::vector<Halfspace> reduced;
    for (const auto& h : halfspaces) {
      RationalPoint a(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) a[i] = dot(basis[i], h.normal);
      reduced.push_back({a, h.offset});
    }
    std::vector<detail::IntVector> rrows;
    for (const auto& h : reduced) rrows.push_back(homogenize(h.normal.coords(), h.offset));
    detail::IntVector t_nonneg(basis.size() + 1, BigInt(0));
    t_nonneg[basis.size()] = -1;
    rrows.push_back(std::move(t_nonneg));
    auto rrays = detail::extreme_rays(rrows, basis.size() + 1);
    if (!rrays) throw std::logic_error("reduced halfspace system still has lineality");
    for (const auto& r : *rrays)
      if (r[basis.size()] > 0) throw UnboundedInput("halfspaces do not bound: the feasible set contains a line");
    return std::nullopt;
  }

  std::vector<RationalPoint> vertices;
  bool recession = false;
  for (const auto& r : *rays) {
    if (r[dim] == 0) {
      recession = true;
      continue;
    }
    RationalPoint v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Rational(r[i], r[dim]);
      v[i].canonicalize();
    }
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) return std::nullopt;
  if (recession) throw UnboundedInput("halfspaces do not bound: a recession direction exists");
  return sorted_unique(std::move(vertices));
}

HPolytope HPolytope::from_halfspaces(std::size_t dim, std::vector<Halfspace> halfspaces) {
  auto verts = enumerate_vertices(dim, halfspaces);
  if (!verts) throw DegenerateInput("halfspaces are infeasible");

  HPolytope h;
  h.dim_ = dim;
  h.vertices_ = *verts;
  const bool full = affine_rank(h.vertices_) == dim;
  std::vector<Halfspace> kept;
  for (auto& hs : halfspaces) {
    if (full) {
      std::vector<RationalPoint> on;
      for (const auto& v : h.vertices_)
        if (hs.slack(v) == 0) on.push_back(v);
      if (on.size() < dim || affine_rank(on) + 1 < dim) continue;
    }
    // Normalize to a primitive integer normal so duplicates compare equal.
    auto a = detail::to_primitive_integer(hs.normal.coords());
    Rational factor = 0;
    for (std::size_t i = 0; i < dim; ++i)
      if (hs.normal[i] != 0) {
        factor = Rational(a[i]) / hs.normal[i];
        break;
      }
    Halfspace norm{RationalPoint(dim), hs.offset * factor};
    for (std::size_t i = 0; i < dim; ++i) norm.normal[i] = Rational(a[i]);
    if (factor == 0) {
      if (!full) kept.push_back(std::move(hs));
      continue;
    }
    if (std::find(kept.begin(), kept.end(), norm) == kept.end()) kept.push_back(std::move(norm));
  }
  h.halfspaces_ = std::move(kept);
  return h;
}

HPolytope HPolytope::translated(const RationalPoint& v) const {
  HPolytope h = *this;
  for (auto& hs : h.halfspaces_) hs = hs.translated(v);
  for (auto& x : h.vertices_) x += v;
  return h;
}

std::optional<VPolytope> intersect(const HPolytope& a, const HPolytope& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersection of polytopes in different dimensions");
  std::vector<Halfspace> all = a.halfspaces();
  all.insert(all.end(), b.halfspaces().begin(), b.halfspaces().end());
  auto verts = enumerate_vertices(a.dim(), all);
  if (!verts) return std::nullopt;
  return VPolytope::of_points(std::move(*verts));
}

bool contains(const HPolytope& h, const RationalPoint& x) {
  if (x.dim() != h.dim()) throw DimensionMismatch("containment test dimension");
  for (const auto& hs : h.halfspaces())
    if (!hs.contains(x)) return false;
  return true;
}

namespace {

std::size_t projection_axis(const RationalPoint& normal) {
  for (std::size_t i = 0; i < normal.dim(); ++i)
    if (normal[i] != 0) return i;
  throw std::invalid_argument("hyperplane normal is zero");
}

}  // namespace

Rational projected_measure(std::span<const RationalPoint> points, const RationalPoint& normal) {
  if (points.empty()) return 0;
  const std::size_t n = normal.dim();
  if (n == 1) return 1;
  const std::size_t axis = projection_axis(normal);
  std::vector<RationalPoint> projected;
  projected.reserve(points.size());
  for (const auto& p : points) projected.push_back(drop_axis(p, axis));
  VPolytope low = VPolytope::of_points(std::move(projected));
  if (!low.full_dimensional()) return 0;
  return volume(low);
}

Surd hyperplane_measure(std::span<const RationalPoint> points, const RationalPoint& normal) {
  if (points.empty()) return Surd{0, 1};
  if (normal.dim() == 1) return Surd{1, 1};
  const std::size_t axis = projection_axis(normal);
  Rational base = projected_measure(points, normal);
  return Surd::make(base / abs(normal[axis]), dot(normal, normal));
}

std::vector<FacetMeasure> facet_measure(const VPolytope& p) {
  if (!p.full_dimensional()) throw DegenerateInput("facet measures require a full-dimensional polytope");
  std::vector<FacetMeasure> out;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto& inc = p.facet_vertices()[f];
    auto pts = gather(p.vertices(), inc);
    out.push_back({p.facets()[f], inc, hyperplane_measure(pts, p.facets()[f].normal)});
  }
  return out;
}

}  // namespace simplexcover

#include "simplexcover/diffbody.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simplexcover/linalg.hpp"

namespace simplexcover {

namespace {

std::string subset_label(const std::vector<std::size_t>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < subset.size(); ++k) os << (k ? "," : "") << subset[k] + 1;
  os << '}';
  return os.str();
}

std::string piece_label(const DecompositionPiece& p) {
  std::ostringstream os;
  os << "i=" << p.pair.i << " j=" << p.pair.j << " S=" << subset_label(p.pair.subset);
  return os.str();
}

// conv({o} u {s e_k : k in axes}) in R^n.
VPolytope coordinate_face(std::size_t n, const std::vector<std::size_t>& axes, const Rational& s) {
  std::vector<RationalPoint> pts{RationalPoint::zero(n)};
  for (std::size_t k : axes) {
    RationalPoint e = RationalPoint::zero(n);
    e[k] = s;
    pts.push_back(std::move(e));
  }
  return VPolytope::of_points(std::move(pts));
}

void require_positive(const Rational& mu, const Rational& nu) {
  if (sgn(mu) <= 0 || sgn(nu) <= 0) throw std::invalid_argument("mu and nu must be positive");
}

std::string grid_label(const Rational& mu, const Rational& nu) {
  return "mu=" + to_string(mu) + " nu=" + to_string(nu);
}

}  // namespace

Rational RatioPolynomial::operator()(const Rational& mu, const Rational& nu) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    sum += coefficients[i] * power(mu, unsigned(i)) * power(nu, unsigned(n - i));
  return sum;
}

VPolytope general_difference_body(const VPolytope& k, const Rational& mu, const Rational& nu) {
  require_positive(mu, nu);
  if (!k.full_dimensional()) throw DegenerateInput("difference body needs a full-dimensional body");
  return minkowski_sum(scale(k, mu), scale(k, -nu));
}

VPolytope difference_body(const VPolytope& k) { return general_difference_body(k, 1, 1); }

Rational rs_ratio_formula(std::size_t n, const Rational& mu, const Rational& nu) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return simplex_ratio_polynomial(n)(mu, nu);
}

RatioPolynomial simplex_ratio_polynomial(std::size_t n) {
  RatioPolynomial p{n, {}};
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt c = binomial(unsigned(n), unsigned(i));
    p.coefficients.push_back(Rational(c * c));
  }
  return p;
}

std::vector<DecompositionPiece> simplex_decomposition(std::size_t n, const Rational& mu, const Rational& nu) {
  require_positive(mu, nu);
  if (n < 1 || n > 6) throw std::invalid_argument("simplex decomposition supports 1 <= n <= 6");
  std::vector<DecompositionPiece> pieces;
  for (std::size_t i = 0; i <= n; ++i) {
    // Lexicographic enumeration of i-subsets via a selection mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + i, true);
    std::size_t j = 0;
    do {
      std::vector<std::size_t> in, out;
      for (std::size_t k = 0; k < n; ++k) (mask[k] ? in : out).push_back(k);
      SimplexFacePair pair{i, ++j, in, coordinate_face(n, in, mu), coordinate_face(n, out, -nu)};
      VPolytope body = minkowski_sum(pair.face, pair.coface);
      Rational claimed = power(mu, unsigned(i)) * power(nu, unsigned(n - i)) /
                         Rational(factorial(unsigned(i)) * factorial(unsigned(n - i)));
      pieces.push_back({std::move(pair), std::move(body), claimed});
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return pieces;
}

AuditReport verify_decomposition(const std::vector<DecompositionPiece>& pieces, const VPolytope& body) {
  AuditReport report("decomposition");
  HPolytope hbody = to_hrep(body);

  std::vector<HPolytope> hpieces;
  std::vector<bool> full;
  for (const auto& p : pieces) {
    full.push_back(p.body.full_dimensional());
    hpieces.push_back(full.back() ? to_hrep(p.body) : HPolytope{});
  }

  for (const auto& p : pieces) {
    std::size_t outside = 0;
    for (const auto& v : p.body.vertices())
      if (!contains(hbody, v)) ++outside;
    report.add("piece_contained", Rational(outside), Relation::Equal, Rational(0),
               piece_label(p) + " vertices outside body");
  }

  Rational overlap_total = 0;
  std::string offenders;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      if (!full[a] || !full[b]) continue;
      ++pairs;
      auto common = intersect(hpieces[a], hpieces[b]);
      if (!common || !common->full_dimensional()) continue;
      Rational v = volume(*common);
      overlap_total += v;
      std::string pair = "(" + piece_label(pieces[a]) + ") x (" + piece_label(pieces[b]) + ")";
      report.add("piece_overlap", v, Relation::Equal, Rational(0), pair);
      offenders += (offenders.empty() ? "" : "; ") + pair;
    }
  }
  report.add("interiors_disjoint", overlap_total, Relation::Equal, Rational(0),
             offenders.empty() ? std::to_string(pairs) + " pairs checked" : "overlapping: " + offenders);

  Rational sum = 0;
  for (const auto& p : pieces) {
    Rational v = p.body.full_dimensional() ? volume(p.body) : Rational(0);
    sum += v;
    report.add("piece_volume", v, Relation::Equal, p.claimed_volume, piece_label(p));
  }
  report.add("volume_sum", sum, Relation::Equal, volume(body), std::to_string(pieces.size()) + " pieces");
  return report;
}

std::vector<Rational> mixed_volume_profile(const VPolytope& k, const Rational& first_node) {
  if (sgn(first_node) <= 0) throw std::invalid_argument("interpolation nodes must be positive");
  const std::size_t n = k.dim();
  RationalMatrix vander(n + 1, n + 1);
  RationalPoint values(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    Rational lambda = first_node + Rational(r);
    for (std::size_t c = 0; c <= n; ++c) vander(r, c) = power(lambda, unsigned(c));
    values[r] = volume(general_difference_body(k, 1, lambda));
  }
  auto coeffs = solve(vander, values);
  if (!coeffs) throw std::logic_error("Vandermonde system is singular");
  std::vector<Rational> w(n + 1);
  for (std::size_t i = 0; i <= n; ++i) w[i] = (*coeffs)[i] / Rational(binomial(unsigned(n), unsigned(i)));
  return w;
}

RatioPolynomial ratio_polynomial(const VPolytope& k) {
  const std::size_t n = k.dim();
  auto w = mixed_volume_profile(k);
  Rational vk = volume(k);
  RatioPolynomial p{n, std::vector<Rational>(n + 1)};
  // vol(mu K - nu K) = sum_i C(n,i) W_i nu^i mu^(n-i).
  for (std::size_t i = 0; i <= n; ++i)
    p.coefficients[n - i] = Rational(binomial(unsigned(n), unsigned(i))) * w[i] / vk;
  return p;
}

std::vector<std::pair<Rational, Rational>> default_bound_grid() {
  return {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {3, 2}, {Rational(1, 2), 1}};
}

AuditReport bound_audit(const VPolytope& k, const std::vector<std::pair<Rational, Rational>>& grid) {
  AuditReport report("bounds");
  const unsigned n = unsigned(k.dim());
  Rational vk = volume(k);

  Rational ratio_dk = volume(difference_body(k)) / vk;
  report.add("rogers_shephard_lower", power(2, n), Relation::LessEqual, ratio_dk, "vol(K-K)/vol(K)");
  report.add("rogers_shephard_upper", ratio_dk, Relation::LessEqual, Rational(binomial(2 * n, n)),
             "vol(K-K)/vol(K)");

  for (const auto& [mu, nu] : grid) {
    require_positive(mu, nu);
    Rational ratio = volume(general_difference_body(k, mu, nu)) / vk;
    Rational lambda = nu / mu;
    report.add("brunn_minkowski", power(1 + lambda, n), Relation::LessEqual, Rational(ratio / power(mu, n)),
               grid_label(mu, nu) + " lambda=" + to_string(lambda));
    Rational bound = rs_ratio_formula(n, mu, nu);
    std::string context = grid_label(mu, nu);
    if (ratio > bound) context += " CONJECTURE VIOLATED: ratio exceeds the simplex value";
    report.add("simplex_ratio_probe", ratio, Relation::LessEqual, bound, context);
  }
  return report;
}

TwoToOneChain two_to_one_chain(std::size_t n) {
  TwoToOneChain chain;
  chain.exact = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt c = binomial(unsigned(n), unsigned(i));
    chain.exact += c * c * (BigInt(1) << unsigned(i));
  }
  BigInt mid = binomial(unsigned(n), unsigned(n / 2));
  chain.middle = (BigInt(1) << unsigned(n)) * mid * mid;
  chain.power = BigInt(1) << unsigned(3 * n);
  return chain;
}

}  // namespace simplexcover

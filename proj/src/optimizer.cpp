#include "simplexcover/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <random>
#include <thread>

#include "simplexcover/errors.hpp"

namespace simplexcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<FloatMatrix> float_inverse(FloatMatrix m) {
  const std::size_t n = m.size();
  FloatMatrix inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const double d = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0.0) continue;
      const double f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

double float_det(FloatMatrix m) {
  const std::size_t n = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

bool nearly_singular(const FloatMatrix& b, double det) {
  double norms = 1.0;
  for (const auto& row : b) {
    double s = 0;
    for (double v : row) s += v * v;
    norms *= std::sqrt(s);
  }
  return !(std::abs(det) > 1e-9 * norms) || !std::isfinite(det);
}

FloatMatrix normalized(FloatMatrix b) {
  const double det = std::abs(float_det(b));
  // Power-of-two scale keeps rational entries short after rationalization.
  const double s = std::exp2(std::round(-std::log2(det) / double(b.size())));
  for (auto& row : b)
    for (double& v : row) v *= s;
  return b;
}

std::vector<double> flatten(const FloatMatrix& b) {
  std::vector<double> x;
  for (const auto& row : b) x.insert(x.end(), row.begin(), row.end());
  return x;
}

FloatMatrix unflatten(const std::vector<double>& x, std::size_t n) {
  FloatMatrix b(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = x[i * n + j];
  return b;
}

// Pairwise size reduction in floating point; the covering radius only
// depends on the lattice, and short bases keep the candidate box small.
FloatMatrix size_reduced(FloatMatrix b) {
  const std::size_t n = b.size();
  auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };
  for (int pass = 0; pass < 100; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double mu = std::round(dot(b[i], b[j]) / dot(b[j], b[j]));
        if (mu == 0) continue;
        std::vector<double> shorter = b[i];
        for (std::size_t c = 0; c < n; ++c) shorter[c] -= mu * b[j][c];
        if (dot(shorter, shorter) < dot(b[i], b[i]) * (1 - 1e-12)) {
          b[i] = std::move(shorter);
          changed = true;
        }
      }
    if (!changed) break;
  }
  return b;
}

}  // namespace

CoveringRadius::CoveringRadius(const VPolytope& k) : n_(k.dim()) {
  if (!k.full_dimensional()) throw DegenerateInput("covering body must be full-dimensional");
  volume_ = simplexcover::volume(k).get_d();
  std::vector<double> c(n_, 0.0);
  for (const auto& v : k.vertices())
    for (std::size_t i = 0; i < n_; ++i) c[i] += v[i].get_d() / double(k.vertices().size());
  for (const auto& h : k.facets()) {
    std::vector<double> a = h.normal.to_doubles();
    double b = h.offset.get_d();
    for (std::size_t i = 0; i < n_; ++i) b -= a[i] * c[i];
    for (double& ai : a) ai /= b;
    normals_.push_back(std::move(a));
  }
  for (const auto& v : k.vertices()) {
    std::vector<double> w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = v[i].get_d() - c[i];
    centered_vertices_.push_back(std::move(w));
  }
}

double CoveringRadius::operator()(const FloatMatrix& input, double rel_tol) const {
  if (input.size() != n_) throw DimensionMismatch("basis dimension differs from body");
  if (nearly_singular(input, float_det(input))) return kInf;
  const FloatMatrix basis = size_reduced(input);
  const double det = float_det(basis);
  double t_max = 2.0 * std::pow(std::abs(det) / volume_, 1.0 / double(n_));
  for (int attempt = 0; attempt < 8; ++attempt, t_max *= 2.0) {
    bool complete = false;
    double r = radius(basis, t_max, rel_tol, complete);
    if (!std::isfinite(r)) return kInf;
    if (complete) return r;
  }
  return kInf;
}

double CoveringRadius::radius(const FloatMatrix& basis, double t_max, double rel_tol, bool& complete) const {
  const std::size_t n = n_;
  auto inv = float_inverse(basis);
  if (!inv) return kInf;

  // Gauge in lattice coordinates: g(w) = max_F alpha_F . w.
  const std::size_t nf = normals_.size();
  std::vector<double> alpha(nf * n), l1(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += basis[i][j] * normals_[f][j];
      alpha[f * n + i] = s;
      l1[f] += std::abs(s);
    }
  }
  std::vector<double> lo(n, kInf), hi(n, -kInf);
  for (const auto& v : centered_vertices_)
    for (std::size_t i = 0; i < n; ++i) {
      double w = 0;
      for (std::size_t j = 0; j < n; ++j) w += v[j] * (*inv)[j][i];
      lo[i] = std::min(lo[i], w);
      hi[i] = std::max(hi[i], w);
    }

  // Translates of t_max K meeting the unit cell.
  std::vector<long> first(n), last(n);
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = long(std::ceil(-t_max * hi[i] - 1e-9));
    last[i] = long(std::floor(1.0 - t_max * lo[i] + 1e-9));
    count *= double(last[i] - first[i] + 1);
  }
  if (count > 2e5) return kInf;
  std::vector<double> cand;
  {
    std::vector<long> u = first;
    while (true) {
      for (std::size_t i = 0; i < n; ++i) cand.push_back(double(u[i]));
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (u[i] < last[i]) {
          ++u[i];
          break;
        }
        u[i] = first[i];
      }
      if (i == n) break;
    }
  }

  struct Box {
    std::vector<double> center;
    double half;
    double upper;
    std::vector<std::uint32_t> cand;
  };
  double best_lower = 0;  // max over evaluated centers of min_u g(center - u)

  auto evaluate = [&](Box& b, const std::vector<std::uint32_t>& from) {
    double upper = kInf, at_center = kInf;
    std::vector<double> lows(from.size());
    std::vector<double> w(n);
    for (std::size_t k = 0; k < from.size(); ++k) {
      const double* u = &cand[from[k] * n];
      for (std::size_t i = 0; i < n; ++i) w[i] = b.center[i] - u[i];
      double g = -kInf, gu = -kInf, gl = -kInf;
      for (std::size_t f = 0; f < nf; ++f) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += alpha[f * n + i] * w[i];
        g = std::max(g, s);
        gu = std::max(gu, s + b.half * l1[f]);
        gl = std::max(gl, s - b.half * l1[f]);
      }
      at_center = std::min(at_center, g);
      upper = std::min(upper, gu);
      lows[k] = gl;
    }
    b.upper = upper;
    b.cand.clear();
    for (std::size_t k = 0; k < from.size(); ++k)
      if (lows[k] <= upper) b.cand.push_back(from[k]);
    best_lower = std::max(best_lower, at_center);
  };

  auto cmp = [](const Box& a, const Box& b) { return a.upper < b.upper; };
  std::priority_queue<Box, std::vector<Box>, decltype(cmp)> queue(cmp);
  {
    Box root{std::vector<double>(n, 0.5), 0.5, 0, {}};
    std::vector<std::uint32_t> all(cand.size() / n);
    for (std::uint32_t k = 0; k < all.size(); ++k) all[k] = k;
    evaluate(root, all);
    queue.push(std::move(root));
  }
  std::size_t steps = 0;
  while (true) {
    const Box& top = queue.top();
    if (top.upper <= best_lower * (1.0 + rel_tol) || ++steps > 2'000'000) {
      double r = top.upper;
      complete = r <= t_max;
      return r;
    }
    Box b = top;
    queue.pop();
    const double h = b.half / 2;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      Box child{b.center, h, 0, {}};
      for (std::size_t i = 0; i < n; ++i) child.center[i] += ((mask >> i) & 1) ? h : -h;
      evaluate(child, b.cand);
      if (child.upper > best_lower * (1.0 + rel_tol)) queue.push(std::move(child));
    }
    if (queue.empty()) {
      complete = best_lower <= t_max;
      return best_lower * (1.0 + rel_tol);
    }
  }
}

double search_objective(const VPolytope& k, const FloatMatrix& basis, double rel_tol) {
  CoveringRadius radius(k);
  double t = radius(basis, rel_tol);
  if (!std::isfinite(t)) return kInf;
  return radius.volume() * std::pow(t, double(k.dim())) / std::abs(float_det(basis));
}

RationalMatrix rationalize(const FloatMatrix& basis, std::int64_t max_denominator) {
  const std::size_t n = basis.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rationalize(basis[i][j], max_denominator);
  return m;
}

RationalMatrix unimodular_reduce(const RationalMatrix& basis) {
  const std::size_t n = basis.rows();
  if (rank(basis) < n) throw DegenerateInput("cannot reduce a singular basis");
  std::vector<RationalPoint> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(basis.row(i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational mu(round_nearest(dot(b[i], b[j]) / dot(b[j], b[j])));
        if (sgn(mu) == 0) continue;
        RationalPoint shorter = b[i] - mu * b[j];
        if (dot(shorter, shorter) < dot(b[i], b[i])) {
          b[i] = std::move(shorter);
          changed = true;
        }
      }
  }
  return RationalMatrix::from_rows(b);
}

namespace {

CoveringOptions covering_options(const SearchConfig& cfg) {
  CoveringOptions opt;
  opt.max_depth = cfg.depth;
  return opt;
}

struct Certified {
  bool ok = false;
  RationalMatrix basis;
  ScaleBracket bracket;
  Rational density;
};

Certified certify(const VPolytope& k, const FloatMatrix& basis, const SearchConfig& cfg, double t_guess) {
  Certified out;
  FloatMatrix unit = normalized(basis);
  RationalMatrix rb = unimodular_reduce(rationalize(unit, cfg.max_denominator));
  if (determinant(rb) == 0) return out;
  Lattice lattice(rb);
  if (!std::isfinite(t_guess)) t_guess = CoveringRadius(k)(rb.to_doubles(), cfg.search_tolerance);
  if (!std::isfinite(t_guess)) return out;
  Rational t(rationalize(t_guess, 1'000'000));
  Rational tol = cfg.scale_tolerance * t;
  std::optional<Rational> hint = Rational(t + tol);
  try {
    out.bracket = min_cover_scale(k, lattice, tol, covering_options(cfg), hint);
  } catch (const DepthExhausted&) {
    return out;
  }
  out.ok = true;
  out.basis = std::move(rb);
  out.density = volume(k) * power(out.bracket.t_hi, unsigned(k.dim())) / lattice.det();
  return out;
}

}  // namespace

double objective(const VPolytope& k, const FloatMatrix& basis, const SearchConfig& cfg) {
  if (basis.size() != k.dim()) throw DimensionMismatch("basis dimension differs from body");
  if (nearly_singular(basis, float_det(basis))) return kInf;
  Certified c = certify(k, basis, cfg, kInf);
  return c.ok ? c.density.get_d() : kInf;
}

namespace {

// Seeds in the frame of the standard simplex.
FloatMatrix standard_seed(std::size_t n) {
  FloatMatrix b(n, std::vector<double>(n, 0.0));
  if (n == 2) return {{2.0 / 3, -1.0 / 3}, {-1.0 / 3, 2.0 / 3}};
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1.0;
  if (n == 3) b[2] = {0.5, 0.5, 0.5};
  return b;
}

// Linear part of the affine map taking the standard simplex onto K.
std::optional<FloatMatrix> simplex_frame(const VPolytope& k) {
  if (!k.is_simplex()) return std::nullopt;
  const std::size_t n = k.dim();
  FloatMatrix a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(k.vertices()[i + 1][j] - k.vertices()[0][j]).get_d();
  return a;
}

FloatMatrix times(const FloatMatrix& a, const FloatMatrix& b) {
  const std::size_t n = a.size();
  FloatMatrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

FloatMatrix random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  FloatMatrix q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : q[i]) v = g(rng);
    for (std::size_t j = 0; j < i; ++j) {
      double d = 0;
      for (std::size_t c = 0; c < n; ++c) d += q[i][c] * q[j][c];
      for (std::size_t c = 0; c < n; ++c) q[i][c] -= d * q[j][c];
    }
    double norm = 0;
    for (double v : q[i]) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : q[i]) v /= norm;
  }
  return q;
}

struct RestartOutcome {
  std::vector<HistoryEntry> history;
  FloatMatrix basis;
  double value = kInf;
  Certified certified;
};

using Objective = std::function<double(const std::vector<double>&)>;

void nelder_mead(const Objective& f, std::vector<double>& x, double& fx, const SearchConfig& cfg, double step,
                 std::size_t iterations, std::vector<HistoryEntry>& history) {
  const std::size_t d = x.size();
  double scale = 0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  std::vector<std::vector<double>> pts{x};
  std::vector<double> vals{fx};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> p = x;
    p[i] += step * scale;
    vals.push_back(f(p));
    pts.push_back(std::move(p));
  }
  std::vector<std::size_t> order(d + 1);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i <= d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[d - 1];
    std::vector<double> centroid(d, 0.0);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) centroid[i] += pts[order[k]][i] / double(d);
    auto along = [&](double coef) {
      std::vector<double> p(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = centroid[i] + coef * (pts[worst][i] - centroid[i]);
      return p;
    };
    std::vector<double> r = along(-cfg.reflection);
    double fr = f(r);
    if (fr < vals[best]) {
      std::vector<double> e = along(-cfg.reflection * cfg.expansion);
      double fe = f(e);
      if (fe < fr) {
        pts[worst] = std::move(e);
        vals[worst] = fe;
      } else {
        pts[worst] = std::move(r);
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = std::move(r);
      vals[worst] = fr;
    } else {
      bool outside = fr < vals[worst];
      std::vector<double> c = along(outside ? -cfg.reflection * cfg.contraction : cfg.contraction);
      double fc = f(c);
      if (fc < (outside ? fr : vals[worst])) {
        pts[worst] = std::move(c);
        vals[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= d; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < d; ++i) pts[k][i] = pts[best][i] + cfg.shrink * (pts[k][i] - pts[best][i]);
          vals[k] = f(pts[k]);
        }
      }
    }
    std::size_t arg = std::min_element(vals.begin(), vals.end()) - vals.begin();
    history.push_back({history.size(), 0, vals[arg], 0});
  }
  std::size_t arg = std::min_element(vals.begin(), vals.end()) - vals.begin();
  x = pts[arg];
  fx = vals[arg];
}

void anneal(const Objective& f, std::vector<double>& x, double& fx, const SearchConfig& cfg, std::mt19937_64& rng,
            std::vector<HistoryEntry>& history) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double scale = 0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  std::vector<double> cur = x;
  double fcur = fx, temp = cfg.anneal_temperature, step = cfg.initial_step * scale;
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    std::vector<double> p = cur;
    for (double& v : p) v += step * g(rng);
    double fp = f(p);
    if (fp < fcur || (std::isfinite(fp) && u(rng) < std::exp(-(fp - fcur) / (temp * fcur)))) {
      cur = std::move(p);
      fcur = fp;
    }
    if (fcur < fx) {
      x = cur;
      fx = fcur;
    }
    temp *= cfg.anneal_cooling;
    step *= std::sqrt(cfg.anneal_cooling);
    history.push_back({it, 0, fx, 0});
  }
}

RestartOutcome run_restart(const VPolytope& k, const SearchConfig& cfg, std::size_t r) {
  const std::size_t n = k.dim();
  std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ull * (r + 1));
  FloatMatrix start;
  auto frame = simplex_frame(k);
  if (r == 0 || (r == 1 && n <= 3)) {
    start = standard_seed(n);
    if (frame) start = times(start, *frame);
    if (r == 1) {
      std::normal_distribution<double> g(0.0, 0.05);
      for (auto& row : start)
        for (double& v : row) v += g(rng);
    }
  } else {
    start = random_orthogonal(rng, n);
    if (frame) start = times(start, *frame);
  }
  start = normalized(start);

  CoveringRadius radius(k);
  Objective f = [&](const std::vector<double>& x) {
    FloatMatrix b = unflatten(x, n);
    double det = std::abs(float_det(b));
    double t = radius(b, cfg.search_tolerance);
    if (!std::isfinite(t) || det == 0) return kInf;
    return radius.volume() * std::pow(t, double(n)) / det;
  };

  RestartOutcome out;
  std::vector<double> x = flatten(start);
  double fx = f(x);
  if (cfg.method == "anneal")
    anneal(f, x, fx, cfg, rng, out.history);
  else {
    // The objective is piecewise smooth, so a collapsed simplex is rebuilt
    // around the incumbent with a smaller step.
    const std::size_t rounds = 4, chunk = std::max<std::size_t>(1, cfg.iterations / rounds);
    double step = cfg.initial_step;
    for (std::size_t done = 0; done < cfg.iterations; done += chunk, step *= 0.5)
      nelder_mead(f, x, fx, cfg, step, std::min(chunk, cfg.iterations - done), out.history);
  }
  for (auto& h : out.history) h.restart = r;
  out.basis = unflatten(x, n);
  out.value = fx;
  if (std::isfinite(fx)) {
    FloatMatrix unit = normalized(out.basis);
    out.certified = certify(k, unit, cfg, radius(unit, cfg.search_tolerance));
  }
  return out;
}

}  // namespace

SearchResult optimize_lattice(const VPolytope& k, const SearchConfig& cfg) {
  const std::size_t n = k.dim();
  if (n < 2 || n > 4) throw std::invalid_argument("lattice search supports 2 <= n <= 4");
  if (cfg.dim != 0 && cfg.dim != n) throw DimensionMismatch("search dimension differs from body");
  if (cfg.restarts == 0 || cfg.iterations == 0) throw std::invalid_argument("restarts and iterations must be positive");
  if (cfg.method != "nelder-mead" && cfg.method != "anneal")
    throw std::invalid_argument("unknown search method '" + cfg.method + "'");

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, unsigned(cfg.restarts)));
  if (workers == 1) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(k, cfg, r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < cfg.restarts; r += workers) outcomes[r] = run_restart(k, cfg, r);
      });
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  std::optional<std::size_t> winner;
  double best = kInf;
  std::size_t iteration = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    for (auto h : outcomes[r].history) {
      best = std::min(best, h.value);
      h.iteration = iteration++;
      h.best = best;
      result.history.push_back(h);
    }
    const auto& c = outcomes[r].certified;
    if (c.ok && (!winner || c.density < outcomes[*winner].certified.density)) winner = r;
  }
  if (!winner) throw NoCoveringFound("no restart produced a certified covering");

  const Certified& c = outcomes[*winner].certified;
  result.best_restart = *winner;
  result.t_lo = c.bracket.t_lo;
  result.t_hi = c.bracket.t_hi;
  RationalMatrix scaled = c.basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) /= c.bracket.t_hi;
  result.best_basis = scaled;
  Lattice lattice(scaled);
  result.best_density = density(k, lattice);
  if (result.best_density != c.density) throw std::logic_error("rescaled density disagrees with the bracket");
  result.certificate = is_covering(k, lattice, covering_options(cfg));
  if (!result.certificate.covered()) throw std::logic_error("winning lattice failed re-certification");

  result.audits = AuditReport("optimizer");
  result.audits.append(hadwiger_audit(k, lattice, result.certificate));
  if (k.is_simplex() && n >= 3) result.audits.append(theorem2_audit(k, lattice, result.certificate));
  return result;
}

}  // namespace simplexcover

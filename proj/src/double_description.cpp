#include "double_description.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "simplexcover/linalg.hpp"

namespace simplexcover::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool contains(const Bits& sub) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((sub.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bits zero;
};

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void make_primitive(IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector to_primitive_integer(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  make_primitive(out);
  return out;
}

std::optional<std::vector<IntVector>> extreme_rays(const std::vector<IntVector>& rows, std::size_t d) {
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != d) throw std::invalid_argument("constraint row length mismatch");

  // Greedy choice of d independent rows via incremental echelon reduction.
  std::vector<std::size_t> basis;
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
    std::vector<Rational> r(rows[i].begin(), rows[i].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (r[pivots[k]] == 0) continue;
      Rational f = r[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t c = 0; c < d; ++c) r[c] -= f * echelon[k][c];
    }
    std::size_t p = 0;
    while (p < d && r[p] == 0) ++p;
    if (p == d) continue;
    basis.push_back(i);
    echelon.push_back(std::move(r));
    pivots.push_back(p);
  }
  if (basis.size() < d) return std::nullopt;

  RationalMatrix ab(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) ab(r, c) = Rational(rows[basis[r]][c]);
  auto inv = inverse(ab);
  if (!inv) throw std::logic_error("double description: basis rows are singular");

  std::vector<bool> processed(m, false);
  for (auto b : basis) processed[b] = true;

  std::vector<Ray> rays;
  rays.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = -(*inv)(r, k);
    Ray ray{to_primitive_integer(col), Bits(m)};
    for (auto b : basis)
      if (dot(rows[b], ray.v) == 0) ray.zero.set(b);
    rays.push_back(std::move(ray));
  }

  for (std::size_t idx = 0; idx < m; ++idx) {
    if (processed[idx]) continue;
    processed[idx] = true;
    const IntVector& a = rows[idx];

    std::vector<BigInt> s(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(a, rays[r].v);
      int sg = sgn(s[r]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(r);
    }
    if (pos.empty()) {
      for (auto r : zer) rays[r].zero.set(idx);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(neg.size() + zer.size() + pos.size() * neg.size() / 2 + 1);
    for (auto r : neg) next.push_back(rays[r]);
    for (auto r : zer) {
      next.push_back(rays[r]);
      next.back().zero.set(idx);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (rays[r].zero.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(d);
        const BigInt neg_sq = -s[q];
        for (std::size_t c = 0; c < d; ++c) v[c] = s[p] * rays[q].v[c] + neg_sq * rays[p].v[c];
        make_primitive(v);
        common.set(idx);
        next.push_back(Ray{std::move(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace simplexcover::detail

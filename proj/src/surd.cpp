#include "simplexcover/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexcover {

namespace {

// Splits n = s^2 * f by trial division; f is squarefree whenever n has no
// repeated prime factor above the trial bound.
void split_square(const BigInt& n, BigInt& square_root, BigInt& rest) {
  square_root = 1;
  rest = n;
  for (unsigned long p = 2; p <= 100000; ++p) {
    BigInt pp = p * p;
    if (pp > rest) break;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      square_root *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    square_root *= r;
    rest = 1;
  }
}

}  // namespace

Surd Surd::make(const Rational& r, const Rational& q) {
  if (q < 0) throw std::invalid_argument("negative radicand");
  if (r == 0 || q == 0) return Surd{0, 1};
  // sqrt(a/b) = sqrt(a*b)/b
  BigInt ab = q.get_num() * q.get_den();
  BigInt s, f;
  split_square(ab, s, f);
  Rational coeff = r * Rational(s, q.get_den());
  coeff.canonicalize();
  return Surd{coeff, f};
}

double Surd::to_double() const { return coefficient.get_d() * std::sqrt(radicand.get_d()); }

std::string Surd::to_string() const {
  if (radicand == 1) return coefficient.get_str();
  return coefficient.get_str() + "*sqrt(" + radicand.get_str() + ")";
}

SurdSum& SurdSum::operator+=(const Surd& s) {
  if (s.coefficient == 0) return *this;
  Rational& slot = terms_[s.radicand];
  slot += s.coefficient;
  if (slot == 0) terms_.erase(s.radicand);
  return *this;
}

SurdSum& SurdSum::operator+=(const SurdSum& other) {
  for (const auto& [q, r] : other.terms_) *this += Surd{r, q};
  return *this;
}

double SurdSum::to_double() const {
  double total = 0;
  for (const auto& [q, r] : terms_) total += Surd{r, q}.to_double();
  return total;
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [q, r] : terms_) {
    if (!out.empty()) out += " + ";
    out += Surd{r, q}.to_string();
  }
  return out;
}

}  // namespace simplexcover

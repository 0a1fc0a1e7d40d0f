#include "simplexcover/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexcover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  std::string owned(s.front() == '+' ? s.substr(1) : s);
  return BigInt(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole), 10);
    BigInt f(std::string(frac), 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(w * scale + f, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

Rational rationalize(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  // Continued fraction on the exact dyadic value, so the expansion is finite.
  Rational x = exact_from_double(value);
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  const BigInt cap = BigInt(static_cast<long>(max_denominator));
  Rational rest = x;
  while (true) {
    BigInt a = floor(rest);
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    if (q2 > cap) {
      // Best semiconvergent within the cap.
      BigInt k = (cap - q0) / q1;
      Rational semi(k * p1 + p0, k * q1 + q0);
      semi.canonicalize();
      Rational conv(p1, q1);
      conv.canonicalize();
      return abs(semi - x) < abs(conv - x) ? semi : conv;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt round_nearest(const Rational& value) { return floor(value + Rational(1, 2)); }

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) return -simplest_between(-hi, -lo);
  Rational up(ceil(lo));
  if (up <= hi) return up;
  Rational whole(floor(lo));
  Rational rest = simplest_between(1 / (hi - whole), 1 / (lo - whole));
  return whole + 1 / rest;
}

Rational power(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& value, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("root degree must be positive");
  if (value < 0) return std::nullopt;
  BigInt num, den;
  if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), degree) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), degree) == 0) return std::nullopt;
  return Rational(num, den);
}

std::string to_decimal(const Rational& value, unsigned digits) {
  BigInt den = value.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  const bool terminating = den == 1;
  const unsigned places = terminating ? std::max(twos, fives) : digits;

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Rational scaled = abs(value) * Rational(scale);
  BigInt units = terminating ? BigInt(scaled.get_num() / scaled.get_den()) : round_nearest(scaled);

  std::string digits_str = units.get_str();
  if (digits_str.size() <= places) digits_str.insert(0, places + 1 - digits_str.size(), '0');
  std::string out = value < 0 ? "-" : "";
  out += digits_str.substr(0, digits_str.size() - places);
  if (places > 0) {
    out += '.';
    out += digits_str.substr(digits_str.size() - places);
  }
  return out;
}

bool fits_int64(const BigInt& value) {
  static const BigInt lo("-9223372036854775808", 10);
  static const BigInt hi("9223372036854775807", 10);
  return value >= lo && value <= hi;
}

}  // namespace simplexcover

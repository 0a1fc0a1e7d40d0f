#pragma once

#include <map>
#include <string>

#include "simplexcover/rational.hpp"

namespace simplexcover {

/// Exact value coefficient * sqrt(radicand) with a squarefree radicand >= 1.
struct Surd {
  Rational coefficient = 0;
  BigInt radicand = 1;

  /// Builds r * sqrt(q) for rational q >= 0, pulling square factors out.
  static Surd make(const Rational& r, const Rational& q);

  double to_double() const;
  std::string to_string() const;
};

/// Finite sum of surds, grouped by radicand. Sums of distinct radicals are
/// kept symbolic; only comparisons fall back to floating point.
class SurdSum {
 public:
  SurdSum() = default;
  explicit SurdSum(const Surd& s) { *this += s; }

  SurdSum& operator+=(const Surd& s);
  SurdSum& operator+=(const SurdSum& other);

  const std::map<BigInt, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double to_double() const;
  std::string to_string() const;

 private:
  std::map<BigInt, Rational> terms_;
};

}  // namespace simplexcover

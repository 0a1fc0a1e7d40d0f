#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "simplexcover/rational.hpp"

namespace simplexcover {

/// Exact point (or vector) in Q^n.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::size_t dim) : coords_(dim) {}
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalPoint zero(std::size_t dim) { return RationalPoint(dim); }
  static RationalPoint unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  RationalPoint& operator+=(const RationalPoint& other);
  RationalPoint& operator-=(const RationalPoint& other);
  RationalPoint& operator*=(const Rational& s);

  friend RationalPoint operator+(RationalPoint a, const RationalPoint& b) { return a += b; }
  friend RationalPoint operator-(RationalPoint a, const RationalPoint& b) { return a -= b; }
  friend RationalPoint operator*(RationalPoint a, const Rational& s) { return a *= s; }
  friend RationalPoint operator*(const Rational& s, RationalPoint a) { return a *= s; }
  friend RationalPoint operator-(RationalPoint a) { return a *= Rational(-1); }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order.
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords_ < b.coords_; }

  std::vector<double> to_doubles() const;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalPoint& a, const RationalPoint& b);

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::span<const RationalPoint> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalPoint row(std::size_t r) const;
  void set_row(std::size_t r, const RationalPoint& values);
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::vector<std::vector<double>> to_doubles() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row vector times matrix: returns x * M.
RationalPoint multiply(const RationalPoint& x, const RationalMatrix& m);

Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Solves M x = rhs for square nonsingular M.
std::optional<RationalPoint> solve(const RationalMatrix& m, const RationalPoint& rhs);

/// Rank of the affine hull of `points` (number of independent differences).
std::size_t affine_rank(std::span<const RationalPoint> points);

}  // namespace simplexcover

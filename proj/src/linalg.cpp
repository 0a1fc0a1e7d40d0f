#include "simplexcover/linalg.hpp"

#include <stdexcept>

namespace simplexcover {

RationalPoint RationalPoint::unit(std::size_t dim, std::size_t axis) {
  RationalPoint p(dim);
  p[axis] = 1;
  return p;
}

RationalPoint& RationalPoint::operator+=(const RationalPoint& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch in point addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalPoint& RationalPoint::operator-=(const RationalPoint& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch in point subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalPoint& RationalPoint::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::vector<double> RationalPoint::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_d());
  return out;
}

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalPoint> rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().dim());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

RationalPoint RationalMatrix::row(std::size_t r) const {
  RationalPoint p(cols_);
  for (std::size_t c = 0; c < cols_; ++c) p[c] = (*this)(r, c);
  return p;
}

void RationalMatrix::set_row(std::size_t r, const RationalPoint& values) {
  if (values.dim() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<std::vector<double>> RationalMatrix::to_doubles() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).get_d();
  return out;
}

RationalPoint multiply(const RationalPoint& x, const RationalMatrix& m) {
  if (x.dim() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
  RationalPoint out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[k] * m(k, j);
  }
  return out;
}

namespace {

// In-place row echelon form; returns rank and multiplies `det` by the pivots.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      if (det) *det = -*det;
    }
    if (det) *det *= m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  std::size_t r = eliminate(m, &det);
  return r == m.rows() ? det : Rational(0);
}

std::size_t rank(RationalMatrix m) { return eliminate(m, nullptr); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::optional<RationalPoint> solve(const RationalMatrix& m, const RationalPoint& rhs) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  RationalPoint x(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) x[r] += (*inv)(r, c) * rhs[c];
  return x;
}

std::size_t affine_rank(std::span<const RationalPoint> points) {
  if (points.size() <= 1) return 0;
  RationalMatrix diffs(points.size() - 1, points.front().dim());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.set_row(i - 1, points[i] - points.front());
  return rank(std::move(diffs));
}

}  // namespace simplexcover

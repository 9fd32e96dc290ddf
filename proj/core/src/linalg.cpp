#include "dehn/linalg.hpp"

#include <utility>

#include "dehn/errors.hpp"

namespace dehn {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector RationalMatrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[r] += a * v[c];
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product size mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other(k, c);
        if (b != 0) out(r, c) += a * b;
      }
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix sum size mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  return *this + other * Rational(-1);
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Echelon reduced_row_echelon(const RationalMatrix& m) {
  Echelon e{m, {}};
  RationalMatrix& a = e.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead_row, k));
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (a(lead_row, k) != 0) a(r, k) -= f * a(lead_row, k);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    for (const auto& x : v)
      if (x != 0) {
        Rational s = 1 / x;
        for (auto& y : v) y *= s;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InvalidInput("right-hand side size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvalidInput("singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(const std::vector<Vector>& spanning, std::size_t ambient_dim) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Echelon e = reduced_row_echelon(RationalMatrix::from_rows(spanning, ambient_dim));
  pivots_ = e.pivots;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) basis_.push_back(e.reduced.row(i));
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
  return Subspace(units, n);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector size mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (f != 0) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return dehn::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const { return sum(other.basis_); }

Subspace Subspace::sum(const std::vector<Vector>& more) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), more.begin(), more.end());
  return Subspace(all, ambient_);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

std::size_t quotient_dim(const Subspace& sub, const Subspace& ambient) {
  if (sub.ambient_dim() != ambient.ambient_dim()) throw InvalidInput("ambient dimension mismatch");
  if (!ambient.contains(sub)) throw SubspaceNotContained("subspace is not contained in the ambient space");
  return ambient.dim() - sub.dim();
}

std::size_t quotient_dim(const std::vector<Vector>& sub, const std::vector<Vector>& ambient) {
  std::size_t n = 0;
  if (!ambient.empty()) n = ambient.front().size();
  else if (!sub.empty()) n = sub.front().size();
  return quotient_dim(Subspace(sub, n), Subspace(ambient, n));
}

}  // namespace dehn

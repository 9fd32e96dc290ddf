#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  RationalMatrix transpose() const;

  Vector operator*(const Vector& v) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& s) const;
  bool operator==(const RationalMatrix& other) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  RationalMatrix reduced;           // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

// Gauss-Jordan elimination with the leftmost available pivot. Deterministic.
Echelon reduced_row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of the null space. One vector per free column, in increasing column
// order, each scaled so its first nonzero coordinate is 1.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

// Solution x of m x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

RationalMatrix inverse(const RationalMatrix& m);

// A subspace of Q^n stored by its reduced echelon basis, so equal subspaces
// have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);
  Subspace(const std::vector<Vector>& spanning, std::size_t ambient_dim);

  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Reduce v modulo the subspace; the result vanishes on every pivot column.
  Vector reduce(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace sum(const std::vector<Vector>& more) const;

  bool operator==(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// dim(ambient / sub). Throws SubspaceNotContained unless sub is inside ambient.
std::size_t quotient_dim(const std::vector<Vector>& sub, const std::vector<Vector>& ambient);
std::size_t quotient_dim(const Subspace& sub, const Subspace& ambient);

}  // namespace dehn

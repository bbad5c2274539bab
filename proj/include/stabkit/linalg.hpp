#pragma once

// Dense exact linear algebra over ℚ. Dimensions here are tiny (rank of NS plus
// two), so everything is plain Gaussian elimination on value types.

#include <cstddef>
#include <span>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit {

using RatVector = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector sub(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& s, std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested initializer; all rows must have equal length.
  explicit RatMatrix(const std::vector<RatVector>& rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;

  RatMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatVector operator*(const RatMatrix& a, std::span<const Rational> v);

/// xᵀ·M·y.
Rational bilinear(const RatMatrix& m, std::span<const Rational> x, std::span<const Rational> y);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMatrix& m);
Rational determinant(RatMatrix m);

/// Basis of {x : M·x = 0}, one vector per free column of the RREF, in column order.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Unique solution of A·x = b for square nonsingular A; false when A is singular.
bool solve(const RatMatrix& a, std::span<const Rational> b, RatVector& x);

/// det of the k×k leading block for k = 1..n.
std::vector<Rational> leading_principal_minors(const RatMatrix& m);

/// Coefficients c_0..c_n of det(t·I − M), c_n = 1 (Faddeev–LeVerrier).
std::vector<Rational> characteristic_polynomial(const RatMatrix& m);

/// Number of sign changes in a coefficient sequence, zeros skipped.
std::size_t sign_variations(std::span<const Rational> coeffs);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix from Descartes' rule on its characteristic
/// polynomial (exact because every root is real).
Inertia inertia(const RatMatrix& symmetric);

}  // namespace stabkit

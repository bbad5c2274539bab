#include "stabkit/linalg.hpp"

#include <utility>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

void require_same_length(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
}

}  // namespace

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b);
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b);
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const Rational& s, std::span<const Rational> a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(std::span<const Rational> a) {
  for (const auto& x : a) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RatMatrix::RatMatrix(const std::vector<RatVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows()) throw InputError("ragged matrix columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  RatMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  RatMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  RatVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

Rational bilinear(const RatMatrix& m, std::span<const Rational> x, std::span<const Rational> y) {
  if (m.rows() != x.size() || m.cols() != y.size()) throw InputError("bilinear form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Rational determinant(RatMatrix m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RatMatrix& a, std::span<const Rational> b, RatVector& x) {
  if (!a.is_square() || a.rows() != b.size()) throw InputError("solve: dimension mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(std::move(aug), &pivots);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return false;
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = r(i, n);
  return true;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("principal minors of a non-square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

std::vector<Rational> characteristic_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  // M_k = A·M_{k-1} + c_{n-k+1}·I,  c_{n-k} = −tr(A·M_k)/k
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    const RatMatrix am = m * next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
    mk = std::move(next);
  }
  return c;
}

std::size_t sign_variations(std::span<const Rational> coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : coeffs) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Inertia inertia(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw InputError("inertia requires a symmetric matrix");
  const auto p = characteristic_polynomial(symmetric);
  Inertia in;
  while (in.zero < p.size() && sgn(p[in.zero]) == 0) ++in.zero;
  std::vector<Rational> reduced(p.begin() + static_cast<std::ptrdiff_t>(in.zero), p.end());
  in.positive = sign_variations(reduced);
  for (std::size_t i = 1; i < reduced.size(); i += 2) reduced[i] = -reduced[i];
  in.negative = sign_variations(reduced);
  return in;
}

}  // namespace stabkit

#include "sympal/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace sympal {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Field::Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(Errc::DimensionMismatch, "matrix data has wrong length");
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) { return scalar(field, n, 1); }

Matrix Matrix::scalar(const FieldSpec& field, std::size_t n, Field::Elem c) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Field::Elem x) { return x == 0; });
}

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::MixedField, "matrices over different fields");
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  const Field& f = a.f();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.f().add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.f().sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Matrix& a, Field::Elem c) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.f().mul(a(i, j), c);
  return out;
}

Vec mat_vec(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  const Field& f = a.f();
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Field::Elem s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s = f.add(s, f.mul(a(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RowEchelon rref(const Matrix& a) {
  const Field& f = a.f();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(a.field(), r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
  const Field& f = a.f();
  auto [red, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red(i, free));
    basis.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(a.field(), a.cols(), basis)).reduced;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is not invertible");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

Field::Elem determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const Field& f = a.f();
  Matrix m = a;
  Field::Elem det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

Field::Elem trace(const Matrix& a) {
  Field::Elem t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = a.f().add(t, a(i, i));
  return t;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, const Vec& a, Field::Elem c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](Field::Elem x) { return x == 0; });
}

Field::Elem normalize_leading(const Field& f, Vec& a) {
  for (auto x : a) {
    if (x != 0) {
      const auto inv = f.inv(x);
      for (auto& y : a) y = f.mul(y, inv);
      return inv;
    }
  }
  return 1;
}

// --- EchelonBasis -------------------------------------------------------------

Vec EchelonBasis::reduce(Vec v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& r = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j] != 0) v[j] = f.sub(v[j], f.mul(c, r[j]));
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vec& v) {
  if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "vector length mismatch");
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Field& f = *field_;
  const auto inv = f.inv(r[p]);
  for (auto& x : r) x = f.mul(x, inv);
  // keep existing rows free of the new pivot
  for (auto& row : rows_) {
    const auto c = row[p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j] != 0) row[j] = f.sub(row[j], f.mul(c, r[j]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Matrix EchelonBasis::reduced() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix m(field_, rows_.size(), dim_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows_[order[i]][j];
  return m;
}

}  // namespace sympal

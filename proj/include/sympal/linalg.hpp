#pragma once

// Dense matrices over a Field, acting on column vectors.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sympal/ffield.hpp"

namespace sympal {

using Vec = std::vector<Field::Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Field::Elem> data);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix scalar(const FieldSpec& field, std::size_t n, Field::Elem c);
  /// Rows taken from the given vectors (all of equal length).
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, std::span<const Vec> rows);

  const FieldSpec& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Field::Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Field::Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }

  std::span<const Field::Elem> data() const noexcept { return data_; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  bool operator==(const Matrix& o) const noexcept {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_identity() const noexcept;
  bool is_zero() const noexcept;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field::Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Field::Elem c);
Vec mat_vec(const Matrix& a, const Vec& v);
Matrix transpose(const Matrix& a);
/// Throws Singular.
Matrix inverse(const Matrix& a);
Field::Elem determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
Field::Elem trace(const Matrix& a);

struct RowEchelon {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};
RowEchelon rref(const Matrix& a);
/// Basis (as rows, in reduced form) of {x : a x = 0}.
Matrix nullspace(const Matrix& a);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Vec& a, Field::Elem c);
bool vec_is_zero(const Vec& a);
/// Scale so that the first nonzero coordinate is 1; returns the scale factor used.
Field::Elem normalize_leading(const Field& f, Vec& a);

/// Incrementally maintained reduced echelon basis.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// Adds v if independent; returns true when the span grew.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  /// Basis rows in fully reduced echelon form, sorted by pivot.
  Matrix reduced() const;
  /// Residue of v after reduction by the stored rows.
  Vec reduce(Vec v) const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vec> rows_;  // each normalised with pivot 1, pivots distinct
  std::vector<std::size_t> pivots_;
};

}  // namespace sympal

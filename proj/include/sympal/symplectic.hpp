#pragma once

// Symplectic spaces, similitudes and symplectic transvections.
//
// The form is <u, v> = u^T J v for the Gram matrix J. The standard form pairs
// e_i with f_i = e_{i+n/2}: <e_i, f_i> = 1, <f_i, e_i> = -1.

#include <optional>
#include <variant>

#include "sympal/linalg.hpp"

namespace sympal {

class SympSpace {
 public:
  /// Validates that gram is alternating and nonsingular.
  SympSpace(FieldSpec field, Matrix gram);
  static SympSpace standard(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  bool is_standard() const;

  Field::Elem form(const Vec& u, const Vec& v) const;
  Vec unit(std::size_t i) const;

 private:
  FieldSpec field_;
  Matrix gram_;
};

/// A linear subspace stored by its reduced row echelon basis (rows).
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient_dim);  // zero subspace
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vec> vectors);
  static Subspace whole(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace from_basis(const Matrix& rows);

  const Matrix& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::vector<Vec> vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  Subspace image(const Matrix& a) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const noexcept { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix reduced) : basis_(std::move(reduced)) {}
  Matrix basis_;
};

/// Throws Singular for non-invertible A and NotSimilitude when no multiplier exists.
Field::Elem multiplier_of(const SympSpace& space, const Matrix& a);
bool is_similitude(const SympSpace& space, const Matrix& a);

/// Matrix of u -> u + lambda <u, v> v.
Matrix make_transvection(const SympSpace& space, const Vec& v, Field::Elem lambda);

struct TransvectionData {
  Vec direction;  // first nonzero coordinate is 1
  Field::Elem parameter;
};

enum class TransvectionKind { Trivial, Nontrivial, NotTransvection };

struct TransvectionResult {
  TransvectionKind kind;
  std::optional<TransvectionData> data;  // set iff kind == Nontrivial
};

TransvectionResult detect_transvection(const SympSpace& space, const Matrix& a);

Subspace perp(const SympSpace& space, const Subspace& u);
bool is_nonsingular_subspace(const SympSpace& space, const Subspace& u);
/// A U == U.
bool stabilizes(const Matrix& a, const Subspace& u);

/// Order of Sp_n(F_q), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> sp_order(std::size_t n, std::uint64_t q);

}  // namespace sympal

#pragma once

// Exact arithmetic in F_{ell^r}.
//
// Elements are stored as a single index: the residue polynomial
// c_0 + c_1 x + ... + c_{r-1} x^{r-1} maps to c_0 + c_1 ell + ... + c_{r-1} ell^{r-1}.
// Every field is capped at kMaxOrder elements so that log/exp tables stay small.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sympal/error.hpp"

namespace sympal {

class Field;
using FieldSpec = std::shared_ptr<const Field>;

class Field {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1'000'000;

  /// Canonical field of order ell^degree. Equal (ell, degree) return the same object.
  static FieldSpec make(std::uint32_t ell, std::uint32_t degree);

  std::uint32_t ell() const noexcept { return ell_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return degree_ == 1; }
  /// Monic modulus, constant term first, length degree + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (degree_ == 1) {
      Elem s = a + b;
      return s >= ell_ ? s - ell_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (degree_ == 1) return a == 0 ? 0 : ell_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (degree_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % ell_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws ZeroArgument on 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, ell_); }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  /// Throws Parse if the length or a coefficient is out of range.
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  /// Canonical multiplicative generator (see mult_generator).
  Elem generator() const noexcept { return generator_; }
  /// Discrete log to the canonical generator via table lookup; a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % (order_ - 1)]; }
  std::uint64_t mult_order(Elem a) const;

  /// Position of an element in the canonical (constant-coefficient-major) ordering.
  std::uint32_t canonical_rank(Elem a) const noexcept;

  Field(std::uint32_t ell, std::uint32_t degree, std::vector<std::uint32_t> modulus);

 private:
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t ell_;
  std::uint32_t degree_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;           // length 2(q-1), exp_[k] = g^k
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;  // only for small extension fields
};

/// Least monic irreducible polynomial of the given degree over F_ell, in
/// lexicographic order of (c_0, c_1, ..., c_{r-1}).
std::vector<std::uint32_t> canonical_modulus(std::uint32_t ell, std::uint32_t degree);

/// A field element that carries its field. Mixed-field arithmetic throws MixedField.
class FieldElement {
 public:
  FieldElement(FieldSpec spec, Field::Elem value);
  static FieldElement from_coeffs(FieldSpec spec, std::span<const std::uint32_t> coeffs);
  static FieldElement from_int(FieldSpec spec, std::int64_t v);

  const FieldSpec& spec() const noexcept { return spec_; }
  Field::Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return spec_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const noexcept {
    return spec_ == o.spec_ && value_ == o.value_;
  }

 private:
  void same_field(const FieldElement& o) const;

  FieldSpec spec_;
  Field::Elem value_;
};

FieldSpec field_make(std::uint32_t ell, std::uint32_t degree);
FieldElement mult_generator(const FieldSpec& spec);
/// Baby-step giant-step; returns k in [0, q-1) with g^k = x.
std::uint64_t discrete_log(const FieldElement& x, const FieldElement& g);
FieldElement frobenius(const FieldElement& x);

/// Ring embedding F_{ell^a} -> F_{ell^b}, determined by the image of x.
class Embedding {
 public:
  Embedding(FieldSpec small, FieldSpec big, Field::Elem root);

  const FieldSpec& source() const noexcept { return small_; }
  const FieldSpec& target() const noexcept { return big_; }
  /// Image of the polynomial generator x of the source.
  Field::Elem root() const noexcept { return root_; }

  Field::Elem operator()(Field::Elem a) const { return table_.at(a); }
  FieldElement operator()(const FieldElement& a) const;
  FieldElement image_of_generator() const;
  /// This embedding followed by the k-th power of Frobenius on the target.
  Embedding then_frobenius(unsigned k) const;

 private:
  FieldSpec small_;
  FieldSpec big_;
  Field::Elem root_;
  std::vector<Field::Elem> table_;
};

/// Canonical embedding: x maps to the least root (canonical order) of the source modulus.
Embedding subfield_embed(const FieldSpec& small, const FieldSpec& big);
/// All degree_small embeddings, the canonical one first.
std::vector<Embedding> all_embeddings(const FieldSpec& small, const FieldSpec& big);

}  // namespace sympal

#pragma once

// Tame inertia weight profiles and exponent arithmetic for characters of the
// cyclic groups of order ell^r - 1 (fundamental character psi_r has exponent 1).

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympal {

using BigInt = boost::multiprecision::cpp_int;

struct ProfilePart {
  unsigned niveau = 0;
  std::vector<std::uint64_t> weights;  // a_{i,1}, ..., a_{i,r_i}: base-ell digits, lowest first
};

struct WeightProfile {
  std::uint64_t ell = 0;
  unsigned n = 0;
  std::vector<ProfilePart> parts;
};

struct ProfileCheck {
  bool ok = false;
  std::string violation;  // first violated clause when !ok
  std::uint64_t k = 0;    // largest weight
};

ProfileCheck validate_profile(const WeightProfile& p);

struct NiveauCharacter {
  unsigned niveau = 1;
  BigInt exponent;  // reduced modulo ell^niveau - 1
  bool operator==(const NiveauCharacter&) const = default;
};

/// b_i ell^j mod ell^{r_i} - 1 for every part i and j < r_i, in part order.
/// Throws InvalidProfile.
std::vector<NiveauCharacter> diag_characters(const WeightProfile& p);

/// Compares after lifting both to niveau r1 * r2.
bool characters_equal(const NiveauCharacter& a, const NiveauCharacter& b, std::uint64_t ell);

struct Collision {
  std::size_t first = 0, second = 0;  // indices into diag_characters
  NiveauCharacter a, b;               // the n!-th powers
  unsigned lifted_niveau = 0;
  BigInt lifted_a, lifted_b;          // exponents at the lifted niveau
};

/// For a distinct pair: C0 = |L_i n! c - L_j n! d| with c, d the digit-rotation
/// representatives of the two exponents and L the lifting factors.
struct PairCertificate {
  std::size_t first = 0, second = 0;
  BigInt c0;
  BigInt modulus;     // ell^{r_i r_j} - 1
  bool below_modulus = false;  // 0 < C0 < modulus, as bounded when ell > k n! + 1
};

struct DistinctnessResult {
  std::optional<Collision> collision;  // first colliding pair in index order
  std::vector<PairCertificate> certificates;
  bool distinct() const noexcept { return !collision; }
};

DistinctnessResult check_npower_distinct(const WeightProfile& p, bool with_certificates = false);

/// Shifts every weight by a mod (ell - 1), reducing into [0, ell - 1]. Throws
/// TwistBreaksRegularity when shifted weights collide or a wrap inside a part of
/// niveau > 1 would change the twisted character.
WeightProfile twist_by_cyclotomic(const WeightProfile& p, std::int64_t a);

}  // namespace sympal

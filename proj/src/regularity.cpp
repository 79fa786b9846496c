#include "sympal/regularity.hpp"

#include <set>

#include "sympal/error.hpp"
#include "sympal/numtheory.hpp"

namespace sympal {

namespace {

BigInt big_pow(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt mod_nonneg(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  return r < 0 ? r + m : r;
}

// b = sum_j w[(j + shift) mod r] ell^j, the digit rotation representing b_i ell^shift.
BigInt rotated_digits(const ProfilePart& part, std::uint64_t ell, unsigned shift) {
  BigInt b = 0;
  const unsigned r = part.niveau;
  for (unsigned j = r; j-- > 0;) b = b * ell + part.weights[(j + r - shift) % r];
  return b;
}

struct Lift {
  unsigned niveau;
  BigInt modulus, factor_a, factor_b;
};

Lift lift(unsigned ra, unsigned rb, std::uint64_t ell) {
  const unsigned r = ra * rb;
  const BigInt big = big_pow(ell, r) - 1;
  return {r, big, big / (big_pow(ell, ra) - 1), big / (big_pow(ell, rb) - 1)};
}

}  // namespace

ProfileCheck validate_profile(const WeightProfile& p) {
  ProfileCheck out;
  auto fail = [&](std::string why) {
    out.violation = std::move(why);
    return out;
  };
  if (!nt::is_prime(p.ell)) return fail("ell is not prime");
  if (p.n == 0) return fail("n must be positive");
  if (p.parts.empty()) return fail("profile has no parts");
  unsigned total = 0;
  std::set<std::uint64_t> all;
  std::size_t count = 0;
  for (const auto& part : p.parts) {
    if (part.niveau == 0) return fail("niveau must be positive");
    if (part.weights.size() != part.niveau) return fail("part has weight count different from its niveau");
    std::set<std::uint64_t> local(part.weights.begin(), part.weights.end());
    if (local.size() != part.weights.size()) return fail("weights within a part are not distinct");
    for (auto w : part.weights) {
      if (w > p.ell - 1) return fail("weight outside [0, ell - 1]");
      out.k = std::max(out.k, w);
      all.insert(w);
      ++count;
    }
    total += part.niveau;
  }
  if (total != p.n) return fail("niveaus do not sum to n");
  if (all.size() != count) return fail("weights are not distinct across parts");
  out.ok = true;
  return out;
}

std::vector<NiveauCharacter> diag_characters(const WeightProfile& p) {
  const auto check = validate_profile(p);
  if (!check.ok) throw Error(Errc::InvalidProfile, check.violation);
  std::vector<NiveauCharacter> out;
  for (const auto& part : p.parts) {
    const BigInt mod = big_pow(p.ell, part.niveau) - 1;
    BigInt b = rotated_digits(part, p.ell, 0);
    for (unsigned j = 0; j < part.niveau; ++j) {
      out.push_back({part.niveau, mod_nonneg(b, mod)});
      b *= p.ell;
    }
  }
  return out;
}

bool characters_equal(const NiveauCharacter& a, const NiveauCharacter& b, std::uint64_t ell) {
  const Lift l = lift(a.niveau, b.niveau, ell);
  return mod_nonneg(a.exponent * l.factor_a - b.exponent * l.factor_b, l.modulus) == 0;
}

DistinctnessResult check_npower_distinct(const WeightProfile& p, bool with_certificates) {
  const auto chars = diag_characters(p);
  const BigInt nfact = nt::factorial(p.n);
  // digit-rotation representatives, in the same order as chars
  std::vector<BigInt> reps;
  for (const auto& part : p.parts)
    for (unsigned j = 0; j < part.niveau; ++j) reps.push_back(rotated_digits(part, p.ell, j));

  std::vector<NiveauCharacter> powered;
  for (const auto& c : chars) powered.push_back({c.niveau, mod_nonneg(c.exponent * nfact, big_pow(p.ell, c.niveau) - 1)});

  DistinctnessResult out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i + 1; j < chars.size(); ++j) {
      const Lift l = lift(powered[i].niveau, powered[j].niveau, p.ell);
      const BigInt la = mod_nonneg(powered[i].exponent * l.factor_a, l.modulus);
      const BigInt lb = mod_nonneg(powered[j].exponent * l.factor_b, l.modulus);
      if (la == lb) {
        if (!out.collision) out.collision = Collision{i, j, powered[i], powered[j], l.niveau, la, lb};
        continue;
      }
      if (with_certificates) {
        BigInt c0 = abs(l.factor_a * nfact * reps[i] - l.factor_b * nfact * reps[j]);
        const bool below = c0 > 0 && c0 < l.modulus;
        out.certificates.push_back({i, j, std::move(c0), l.modulus, below});
      }
    }
  }
  return out;
}

WeightProfile twist_by_cyclotomic(const WeightProfile& p, std::int64_t a) {
  const auto check = validate_profile(p);
  if (!check.ok) throw Error(Errc::InvalidProfile, check.violation);
  const std::int64_t period = static_cast<std::int64_t>(p.ell) - 1;
  const std::uint64_t shift = static_cast<std::uint64_t>(((a % period) + period) % period);
  WeightProfile out = p;
  if (shift == 0) return out;
  for (auto& part : out.parts) {
    unsigned wrapped = 0;
    for (auto& w : part.weights) {
      w += shift;
      if (w > p.ell - 1) {
        w -= p.ell - 1;
        ++wrapped;
      }
    }
    // digit-wise shift equals adding shift * (ell^r - 1)/(ell - 1) only if no digit wraps or all do
    if (wrapped != 0 && wrapped != part.niveau)
      throw Error(Errc::TwistBreaksRegularity, "shift wraps some but not all weights of a niveau-" +
                                                   std::to_string(part.niveau) + " part");
  }
  const auto recheck = validate_profile(out);
  if (!recheck.ok) throw Error(Errc::TwistBreaksRegularity, recheck.violation);
  return out;
}

}  // namespace sympal

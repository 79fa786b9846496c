#pragma once

// (n,p)-groups: the monomial image <D, F> of the order-2p character chi_q induced
// from the degree-n unramified extension, reduced into F_{ell^m}.

#include "sympal/groupkit.hpp"

namespace sympal {

struct NpParams {
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t ell = 0;
  unsigned m = 0;  // ord_p(ell): F_{ell^m} is the least field holding mu_p
};

/// Validates the congruence conditions and derives m; throws InvalidParams
/// naming the first failed clause, or FieldTooLarge.
NpParams make_np_params(unsigned n, std::uint64_t q, std::uint64_t p, std::uint64_t ell);

struct NpPrimes {
  std::uint64_t q;
  std::uint64_t p;
  bool operator==(const NpPrimes&) const = default;
};

/// All (q, p) with n < q <= q_max satisfying the congruence part of the set-up,
/// ordered by q then p. Splitting in the auxiliary number field is not checked.
std::vector<NpPrimes> find_np_primes(unsigned n, std::uint64_t q_max);

struct ChiQ {
  NpParams params;
  FieldSpec field;            // F_{ell^m}
  std::uint64_t zeta_index;   // zeta = g^zeta_index for the canonical generator g
  Field::Elem zeta;           // image of the torsion generator, a primitive p-th root
  Field::Elem value_at_q;     // -1
  std::uint64_t order;        // 2p
  std::uint64_t torsion_order;  // p
};

ChiQ build_chi(const NpParams& params);

/// Exponents q^i mod p of the torsion restrictions of chi, chi^q, ..., chi^{q^{n-1}}.
std::vector<std::uint64_t> torsion_exponents(const ChiQ& chi);

/// True iff the exponents are pairwise distinct modulo the common order.
bool induced_irreducible_criterion(std::span<const std::uint64_t> exponents, std::uint64_t modulus);

struct NpGroup {
  ChiQ chi;
  Matrix d;                 // diag(zeta^{q^i})
  Matrix f;                 // e_i -> e_{i+1}, e_n -> alpha * chi(q) e_1 with alpha = 1 untwisted
  Matrix form;              // alternating J with D^T J D = J and F^T J F = alpha^2 J
  Field::Elem alpha = 1;    // unramified twist
  Irreducibility irreducibility = Irreducibility::Unverified;
  MatrixGroup group() const;
};

/// Throws NoInvariantForm or NotIrreducible, both of which contradict the construction.
NpGroup build_np_group(const ChiQ& chi);

/// Replaces F by alpha F; D and the form are unchanged.
NpGroup twist_unramified(const NpGroup& g, Field::Elem alpha);

}  // namespace sympal

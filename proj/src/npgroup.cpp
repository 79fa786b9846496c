#include "sympal/npgroup.hpp"

#include <algorithm>
#include <random>

#include "sympal/numtheory.hpp"

namespace sympal {

namespace {

void check(bool ok, const std::string& clause) {
  if (!ok) throw Error(Errc::InvalidParams, clause);
}

// Alternating forms J with A^T J A = mult(A) J, as a basis of the solution space.
std::vector<Matrix> invariant_forms(const FieldSpec& field, std::size_t n, std::span<const Matrix> gens,
                                    std::span<const Field::Elem> mults) {
  const Field& f = *field;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  // one column per slot, one row per (generator, entry)
  Matrix sys(field, gens.size() * n * n, slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    Matrix e(field, n, n);
    e(slots[c].first, slots[c].second) = 1;
    e(slots[c].second, slots[c].first) = f.neg(1);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Matrix r = transpose(gens[k]) * e * gens[k] - scale(e, mults[k]);
      for (std::size_t idx = 0; idx < n * n; ++idx) sys(k * n * n + idx, c) = r.data()[idx];
    }
  }
  const Matrix ns = nullspace(sys);
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < ns.rows(); ++b) {
    Matrix j(field, n, n);
    for (std::size_t c = 0; c < slots.size(); ++c) {
      j(slots[c].first, slots[c].second) = ns(b, c);
      j(slots[c].second, slots[c].first) = f.neg(ns(b, c));
    }
    out.push_back(std::move(j));
  }
  return out;
}

Matrix nonsingular_combination(const std::vector<Matrix>& basis, std::size_t n) {
  for (const auto& j : basis)
    if (rank(j) == n) return j;
  if (basis.empty()) throw Error(Errc::NoInvariantForm, "no invariant alternating form");
  const FieldSpec& field = basis.front().field();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Field::Elem> coeff(0, field->order() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix j(field, n, n);
    for (const auto& b : basis) j = j + scale(b, coeff(rng));
    if (rank(j) == n) return j;
  }
  throw Error(Errc::NoInvariantForm, "no nonsingular invariant alternating form found");
}

}  // namespace

NpParams make_np_params(unsigned n, std::uint64_t q, std::uint64_t p, std::uint64_t ell) {
  check(n >= 2 && n % 2 == 0, "n must be even and positive");
  check(nt::is_prime(q), "q must be prime");
  check(nt::is_prime(p), "p must be prime");
  check(nt::is_prime(ell), "ell must be prime");
  check(p > n && q > n, "p and q must exceed n");
  check(p % n == 1, "p must be 1 mod n");
  check(q % p != 0, "p must not divide q");
  check(nt::pow_mod(q, n, p) == 1, "p must divide q^n - 1");
  check(nt::pow_mod(q, n / 2, p) != 1, "p must not divide q^(n/2) - 1");
  check(nt::multiplicative_order(q % p, p) == n, "q must have order n modulo p");
  check(ell != p && ell != q, "ell must differ from p and q");
  check(ell != 2, "ell must be odd so that chi(q) = -1 has order 2");
  NpParams out{n, q, p, ell, static_cast<unsigned>(nt::multiplicative_order(ell % p, p))};
  auto size = nt::checked_pow(ell, out.m);
  if (!size || *size > Field::kMaxOrder) throw Error(Errc::FieldTooLarge, "F_{ell^m} exceeds the field size limit");
  return out;
}

std::vector<NpPrimes> find_np_primes(unsigned n, std::uint64_t q_max) {
  check(n >= 2 && n % 2 == 0, "n must be even and positive");
  std::vector<NpPrimes> out;
  for (std::uint64_t q = n + 1; q <= q_max; ++q) {
    if (!nt::is_prime(q)) continue;
    auto qn = nt::checked_pow(q, n);
    check(qn.has_value(), "q^n exceeds 64 bits");
    for (auto p : nt::prime_divisors(*qn - 1)) {
      if (p <= n || p % n != 1 || p == q) continue;
      if (nt::pow_mod(q, n / 2, p) == 1) continue;
      if (nt::multiplicative_order(q % p, p) != n) continue;
      out.push_back({q, p});
    }
  }
  return out;
}

ChiQ build_chi(const NpParams& params) {
  const NpParams v = make_np_params(params.n, params.q, params.p, params.ell);
  auto field = field_make(static_cast<std::uint32_t>(v.ell), v.m);
  const std::uint64_t index = (field->order() - 1) / v.p;  // least j = 1 among g^{j (Q-1)/p}
  const Field::Elem zeta = field->exp(index);
  if (field->mult_order(zeta) != v.p) throw Error(Errc::InvalidParams, "no primitive p-th root in F_{ell^m}");
  return {v, field, index, zeta, field->neg(1), 2 * v.p, v.p};
}

std::vector<std::uint64_t> torsion_exponents(const ChiQ& chi) {
  std::vector<std::uint64_t> out;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < chi.params.n; ++i) {
    out.push_back(e);
    e = nt::mul_mod(e, chi.params.q % chi.params.p, chi.params.p);
  }
  return out;
}

bool induced_irreducible_criterion(std::span<const std::uint64_t> exponents, std::uint64_t modulus) {
  std::vector<std::uint64_t> r;
  for (auto e : exponents) r.push_back(modulus ? e % modulus : e);
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

MatrixGroup NpGroup::group() const { return MatrixGroup(SympSpace(d.field(), form), {d, f}); }

NpGroup build_np_group(const ChiQ& chi) {
  const Field& fld = *chi.field;
  const std::size_t n = chi.params.n;
  Matrix d(chi.field, n, n), fm(chi.field, n, n);
  Field::Elem z = chi.zeta;
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = z;
    z = fld.pow(z, chi.params.q);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) fm(i + 1, i) = 1;
  fm(0, n - 1) = chi.value_at_q;

  const std::vector<Matrix> gens{d, fm};
  const std::vector<Field::Elem> mults{1, 1};
  NpGroup out{chi, d, fm, nonsingular_combination(invariant_forms(chi.field, n, gens, mults), n), 1,
              Irreducibility::Unverified};
  const auto exps = torsion_exponents(chi);
  if (!induced_irreducible_criterion(exps, chi.params.p)) throw Error(Errc::NotIrreducible, "repeated conjugates");
  out.irreducibility = is_irreducible(chi.field, n, gens).status;
  if (out.irreducibility == Irreducibility::Reducible) throw Error(Errc::NotIrreducible, "invariant subspace found");
  return out;
}

NpGroup twist_unramified(const NpGroup& g, Field::Elem alpha) {
  if (alpha == 0) throw Error(Errc::ZeroArgument, "twist scalar must be nonzero");
  NpGroup out = g;
  out.alpha = g.chi.field->mul(g.alpha, alpha);
  out.f = scale(g.f, alpha);
  // the twist leaves the torsion restrictions unchanged
  if (!induced_irreducible_criterion(torsion_exponents(g.chi), g.chi.params.p))
    throw Error(Errc::NotIrreducible, "repeated conjugates");
  out.irreducibility = is_irreducible(g.chi.field, g.chi.params.n, std::vector<Matrix>{out.d, out.f}).status;
  if (out.irreducibility == Irreducibility::Reducible) throw Error(Errc::NotIrreducible, "invariant subspace found");
  return out;
}

}  // namespace sympal

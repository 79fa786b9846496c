#pragma once

// Exact character theory on explicit finite groups. Values live in Z[zeta_m]
// for m the exponent of the ambient group, in the power basis modulo Phi_m.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sympal {

/// Coordinates in 1, zeta, ..., zeta^{phi(m)-1}.
using Cyclo = std::vector<std::int64_t>;

class CycloRing {
 public:
  explicit CycloRing(std::uint64_t m);

  std::uint64_t m() const noexcept { return m_; }
  std::size_t phi() const noexcept { return phi_; }
  /// Coefficients of Phi_m, constant term first.
  const std::vector<std::int64_t>& cyclotomic_polynomial() const noexcept { return poly_; }

  Cyclo zero() const { return Cyclo(phi_, 0); }
  Cyclo integer(std::int64_t v) const;
  Cyclo root(std::uint64_t k) const { return roots_[k % m_]; }  // zeta^k
  Cyclo add(const Cyclo& a, const Cyclo& b) const;
  Cyclo sub(const Cyclo& a, const Cyclo& b) const;
  Cyclo mul(const Cyclo& a, const Cyclo& b) const;
  Cyclo scale(const Cyclo& a, std::int64_t c) const;
  /// Exact division by an integer; nullopt if some coordinate is not divisible.
  std::optional<Cyclo> divide(const Cyclo& a, std::int64_t d) const;
  /// The rational integer a represents, if it is one.
  std::optional<std::int64_t> as_integer(const Cyclo& a) const;

 private:
  std::uint64_t m_;
  std::size_t phi_;
  std::vector<std::int64_t> poly_;
  std::vector<Cyclo> roots_;   // zeta^k, k < m
  std::vector<Cyclo> reduce_;  // x^k mod Phi_m, k < 2 phi
};

class FiniteGroup {
 public:
  using Elem = std::uint32_t;

  /// Permutations act on {0, ..., d-1} as image arrays; (a b)(x) = a(b(x)).
  /// Elements are enumerated breadth first with the identity at index 0.
  static std::shared_ptr<const FiniteGroup> from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                                              std::size_t cap = 200'000);
  /// table[a][b] = a b. Validated as a group table with identity 0; throws Parse.
  static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<std::uint32_t>>& table);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }  // g x g^-1
  std::uint64_t elem_order(Elem a) const noexcept { return orders_[a]; }
  std::uint64_t exponent() const noexcept { return ring_->m(); }
  const CycloRing& ring() const noexcept { return *ring_; }
  /// Permutation images when built from permutations, else empty.
  const std::vector<std::vector<std::uint32_t>>& permutations() const noexcept { return perms_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::shared_ptr<const CycloRing> ring_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup;
using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// A subgroup of an ambient FiniteGroup with its own conjugacy classes.
class Subgroup {
 public:
  using Elem = FiniteGroup::Elem;

  static SubgroupPtr whole(const GroupPtr& g);
  static SubgroupPtr generated(const GroupPtr& g, const std::vector<Elem>& gens);
  /// Throws NotSubgroup if the set is not closed under products.
  static SubgroupPtr from_elements(const GroupPtr& g, std::vector<Elem> elems);

  const GroupPtr& group() const noexcept { return g_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const std::vector<Elem>& elements() const noexcept { return elems_; }  // ascending
  bool contains(Elem x) const noexcept { return member_[x]; }
  bool contains(const Subgroup& h) const;
  bool operator==(const Subgroup& o) const noexcept { return elems_ == o.elems_; }

  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Elem>>& classes() const noexcept { return classes_; }
  /// Class index of a member.
  std::size_t class_of(Elem x) const noexcept { return class_of_[x]; }
  /// A small generating set, greedy in element order.
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  bool is_normal_in(const Subgroup& k) const;
  SubgroupPtr conjugate(Elem g) const;  // g H g^-1
  SubgroupPtr intersect(const Subgroup& o) const;

 private:
  friend std::vector<SubgroupPtr> all_subgroups(const GroupPtr& g);
  Subgroup(GroupPtr g, std::vector<Elem> elems);
  GroupPtr g_;
  std::vector<Elem> elems_;
  std::vector<bool> member_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Elem> gens_;
};

/// Every subgroup of the group, ordered by size then elements.
std::vector<SubgroupPtr> all_subgroups(const GroupPtr& g);
/// Subgroups of k among the given list.
std::vector<SubgroupPtr> subgroups_of(const std::vector<SubgroupPtr>& all, const Subgroup& k);

class ClassFunction {
 public:
  ClassFunction(SubgroupPtr domain, std::vector<Cyclo> values);

  const SubgroupPtr& domain() const noexcept { return domain_; }
  const std::vector<Cyclo>& values() const noexcept { return values_; }
  const Cyclo& at(FiniteGroup::Elem x) const { return values_[domain_->class_of(x)]; }
  /// Value at the identity as an integer, if it is one.
  std::optional<std::int64_t> degree() const;
  bool operator==(const ClassFunction& o) const noexcept { return *domain_ == *o.domain_ && values_ == o.values_; }

  ClassFunction operator+(const ClassFunction& o) const;

  static ClassFunction trivial(const SubgroupPtr& h);
  static ClassFunction regular(const SubgroupPtr& h);
  /// 1 on class c, 0 elsewhere.
  static ClassFunction indicator(const SubgroupPtr& h, std::size_t c);

 private:
  SubgroupPtr domain_;
  std::vector<Cyclo> values_;
};

/// A value num / den in Q(zeta_m), den > 0.
struct CycloRational {
  Cyclo num;
  std::int64_t den = 1;
  std::optional<std::int64_t> as_integer(const CycloRing& ring) const;
};

/// Ind_H^K chi for H the domain of chi; throws NotSubgroup unless H <= K.
ClassFunction induce(const SubgroupPtr& k, const ClassFunction& chi);
/// Res^K_H phi; throws NotSubgroup unless H <= K.
ClassFunction restrict(const ClassFunction& phi, const SubgroupPtr& h);
/// (1/|H|) sum phi1(g^-1) phi2(g) over the common domain H.
CycloRational inner_product(const ClassFunction& phi1, const ClassFunction& phi2);

/// Least-index representatives of H \ K / N.
std::vector<FiniteGroup::Elem> double_cosets(const Subgroup& k, const Subgroup& h, const Subgroup& n);

/// Res_H Ind_N^K chi == sum over H\K/N of Ind_{H cap gNg^-1}^H (chi^g).
bool mackey_check(const SubgroupPtr& k, const SubgroupPtr& h, const ClassFunction& chi);

/// chi^g(x) = chi(g^-1 x g) on g N g^-1.
ClassFunction conjugate_character(const ClassFunction& chi, FiniteGroup::Elem g);

struct LinearCharacter {
  SubgroupPtr domain;
  std::vector<std::uint64_t> exponent;  // chi(x) = zeta_m^exponent, indexed like domain->elements()
  std::uint64_t order = 1;
  ClassFunction as_class_function() const;
  std::uint64_t at(FiniteGroup::Elem x) const;
  LinearCharacter power(std::uint64_t e) const;
  bool operator==(const LinearCharacter& o) const noexcept { return exponent == o.exponent; }
};

std::vector<LinearCharacter> linear_characters(const SubgroupPtr& h);

struct IrreducibleSet {
  std::vector<ClassFunction> characters;
  bool complete = false;  // sum of squared degrees equals |H|
};

/// Irreducible characters of H found as Ind_K^H(lambda) with <Ind, Ind> = 1
/// over all subgroups K of H and linear lambda; complete for M-groups.
IrreducibleSet induced_irreducibles(const SubgroupPtr& h, const std::vector<SubgroupPtr>& all);

enum class PropVerdict { Holds, Counterexample };

/// Checks the hypotheses and reports whether N <= H. Throws HypothesisFailed
/// naming the violated clause.
PropVerdict verify_prop_nh(const SubgroupPtr& g, const SubgroupPtr& n, const SubgroupPtr& h, const LinearCharacter& chi,
                           const ClassFunction& s, std::uint64_t p);

/// Recomputes Res^N_{H cap N} chi and returns whether it is nontrivial, after
/// checking (G:H) <= n < p, N normal and chi of nontrivial p-power order.
bool check_res_nontrivial(const SubgroupPtr& g, const SubgroupPtr& n, const SubgroupPtr& h, const LinearCharacter& chi,
                          std::uint64_t p, std::uint64_t index_bound);

struct SweepReport {
  std::size_t configurations = 0;  // (N, chi, p) triples satisfying the hypotheses
  std::size_t matches = 0;         // (H, S) with Ind_H S = Ind_N chi
  std::size_t holds = 0;
  std::size_t counterexamples = 0;
  std::size_t skipped = 0;           // (N, chi, p) failing a hypothesis
  std::size_t incomplete_bases = 0;  // subgroups H whose irreducibles were not all found
  std::vector<std::string> skip_reasons;
};

/// Exhaustive sweep over normal N (all, or the given one), primes p (all, or the
/// given one) and linear chi on N, then all H and irreducible S of H.
SweepReport sweep_prop_nh(const GroupPtr& g, const SubgroupPtr& normal = nullptr, std::optional<std::uint64_t> p = {});

struct RestrictionReport {
  std::size_t checked = 0;
  std::size_t trivial = 0;
};

/// Every normal N, subgroup H with (G:H) < p and chi of nontrivial p-power order.
RestrictionReport sweep_res_nontrivial(const GroupPtr& g);

struct IdentitySweep {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

/// mackey_check on every (H, N) pair and every class indicator of N.
IdentitySweep sweep_mackey_identity(const GroupPtr& g);
/// <Ind psi, phi> = <psi, Res phi> for every subgroup H and class indicators psi, phi.
IdentitySweep sweep_frobenius(const GroupPtr& g);

/// Generators x -> x + 1 and x -> r x of the affine group C_p : C_ord(r).
std::vector<std::vector<std::uint32_t>> frobenius_generators(std::uint32_t p, std::uint32_t r);

struct NamedGroup {
  std::string name;
  std::vector<std::vector<std::uint32_t>> generators;  // permutation images
};

/// Small test groups, ascending in order, up to A5.
const std::vector<NamedGroup>& fixture_groups();

}  // namespace sympal

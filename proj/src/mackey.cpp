#include "sympal/mackey.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sympal/error.hpp"
#include "sympal/numtheory.hpp"

namespace sympal {

namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

// q = a / b for monic b, exact.
Poly poly_div_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly cyclotomic(std::uint64_t m) {
  static std::map<std::uint64_t, Poly> memo;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (auto d : nt::divisors(m))
    if (d < m) p = poly_div_exact(std::move(p), cyclotomic(d));
  memo[m] = p;
  return p;
}

}  // namespace

CycloRing::CycloRing(std::uint64_t m) : m_(m) {
  require(m >= 1, Errc::InvalidParams, "cyclotomic ring needs m >= 1");
  poly_ = cyclotomic(m);
  phi_ = poly_.size() - 1;
  const std::size_t len = std::max<std::size_t>(m, 2 * phi_);
  std::vector<Cyclo> pw;
  pw.reserve(len);
  Cyclo cur(phi_, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < len; ++k) {
    pw.push_back(cur);
    // cur <- x * cur, then x^phi = -sum poly_[i] x^i
    const std::int64_t top = cur[phi_ - 1];
    for (std::size_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * poly_[i];
  }
  roots_.assign(pw.begin(), pw.begin() + static_cast<std::ptrdiff_t>(m));
  reduce_ = std::move(pw);
}

Cyclo CycloRing::integer(std::int64_t v) const {
  Cyclo c(phi_, 0);
  c[0] = v;
  return c;
}

Cyclo CycloRing::add(const Cyclo& a, const Cyclo& b) const {
  Cyclo c(a);
  for (std::size_t i = 0; i < phi_; ++i) c[i] += b[i];
  return c;
}

Cyclo CycloRing::sub(const Cyclo& a, const Cyclo& b) const {
  Cyclo c(a);
  for (std::size_t i = 0; i < phi_; ++i) c[i] -= b[i];
  return c;
}

Cyclo CycloRing::mul(const Cyclo& a, const Cyclo& b) const {
  std::vector<std::int64_t> prod(2 * phi_ - 1, 0);
  for (std::size_t i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi_; ++j) prod[i + j] += a[i] * b[j];
  }
  Cyclo c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi_));
  for (std::size_t k = phi_; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < phi_; ++i) c[i] += prod[k] * reduce_[k][i];
  }
  return c;
}

Cyclo CycloRing::scale(const Cyclo& a, std::int64_t s) const {
  Cyclo c(a);
  for (auto& x : c) x *= s;
  return c;
}

std::optional<Cyclo> CycloRing::divide(const Cyclo& a, std::int64_t d) const {
  Cyclo c(a);
  for (auto& x : c) {
    if (x % d != 0) return std::nullopt;
    x /= d;
  }
  return c;
}

std::optional<std::int64_t> CycloRing::as_integer(const Cyclo& a) const {
  for (std::size_t i = 1; i < phi_; ++i)
    if (a[i] != 0) return std::nullopt;
  return a[0];
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                                                  std::size_t cap) {
  const std::size_t d = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    require(g.size() == d, Errc::Parse, "permutations act on different point counts");
    std::vector<bool> seen(d, false);
    for (auto x : g) {
      require(x < d && !seen[x], Errc::Parse, "generator is not a permutation");
      seen[x] = true;
    }
  }
  std::vector<std::uint32_t> id(d);
  std::iota(id.begin(), id.end(), 0u);

  std::map<std::vector<std::uint32_t>, Elem> index;
  std::vector<std::vector<std::uint32_t>> elems{id};
  index.emplace(id, 0);
  auto compose = [d](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> c(d);
    for (std::size_t x = 0; x < d; ++x) c[x] = a[b[x]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto c = compose(elems[i], g);
      if (index.count(c)) continue;
      if (elems.size() >= cap) throw CapExceeded(elems.size() + 1, cap);
      index.emplace(c, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(c));
    }
  }

  std::shared_ptr<FiniteGroup> out(new FiniteGroup());
  out->n_ = elems.size();
  out->table_.resize(out->n_ * out->n_);
  for (std::size_t a = 0; a < out->n_; ++a)
    for (std::size_t b = 0; b < out->n_; ++b) out->table_[a * out->n_ + b] = index.at(compose(elems[a], elems[b]));
  out->perms_ = std::move(elems);
  out->finish();
  return out;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t n = table.size();
  require(n > 0, Errc::Parse, "empty multiplication table");
  for (const auto& row : table) {
    require(row.size() == n, Errc::Parse, "multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (auto x : row) {
      require(x < n && !seen[x], Errc::Parse, "table row is not a permutation of the elements");
      seen[x] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    require(table[0][a] == a && table[a][0] == a, Errc::Parse, "element 0 is not the identity");
  // Exhaustive up to order 200, else every 7th triple.
  const std::size_t step = n <= 200 ? 1 : 7;
  for (std::size_t a = 0; a < n; a += step)
    for (std::size_t b = 0; b < n; b += step)
      for (std::size_t c = 0; c < n; c += step)
        require(table[table[a][b]][c] == table[a][table[b][c]], Errc::Parse, "table is not associative");

  std::shared_ptr<FiniteGroup> out(new FiniteGroup());
  out->n_ = n;
  out->table_.reserve(n * n);
  for (const auto& row : table) out->table_.insert(out->table_.end(), row.begin(), row.end());
  out->finish();
  return out;
}

void FiniteGroup::finish() {
  inv_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  orders_.assign(n_, 1);
  std::uint64_t exp = 1;
  for (Elem a = 0; a < n_; ++a) {
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++orders_[a];
    }
    exp = std::lcm(exp, orders_[a]);
  }
  ring_ = std::make_shared<const CycloRing>(exp);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FiniteGroup::Elem> closure(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<FiniteGroup::Elem> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      const auto y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

void require_same_group(const Subgroup& a, const Subgroup& b) {
  require(a.group() == b.group(), Errc::NotSubgroup, "subgroups of different ambient groups");
}

}  // namespace

Subgroup::Subgroup(GroupPtr g, std::vector<Elem> elems) : g_(std::move(g)), elems_(std::move(elems)) {
  const auto& G = *g_;
  member_.assign(G.order(), false);
  for (auto x : elems_) member_[x] = true;
  class_of_.assign(G.order(), 0);
  std::vector<bool> done(G.order(), false);
  for (auto x : elems_) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (auto h : elems_) {
      const auto y = G.conj(h, x);
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
        class_of_[y] = classes_.size();
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  std::vector<bool> reached(G.order(), false);
  reached[0] = true;
  for (auto x : elems_) {
    if (reached[x]) continue;
    gens_.push_back(x);
    for (auto y : closure(G, gens_)) reached[y] = true;
  }
}

SubgroupPtr Subgroup::whole(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), 0u);
  return SubgroupPtr(new Subgroup(g, std::move(all)));
}

SubgroupPtr Subgroup::generated(const GroupPtr& g, const std::vector<Elem>& gens) {
  for (auto x : gens) require(x < g->order(), Errc::NotSubgroup, "generator index out of range");
  return SubgroupPtr(new Subgroup(g, closure(*g, gens)));
}

SubgroupPtr Subgroup::from_elements(const GroupPtr& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  require(!elems.empty() && elems.front() == 0, Errc::NotSubgroup, "set does not contain the identity");
  require(elems.back() < g->order(), Errc::NotSubgroup, "element index out of range");
  std::vector<bool> in(g->order(), false);
  for (auto x : elems) in[x] = true;
  for (auto a : elems)
    for (auto b : elems) require(in[g->mul(a, b)], Errc::NotSubgroup, "set is not closed under products");
  return SubgroupPtr(new Subgroup(g, std::move(elems)));
}

bool Subgroup::contains(const Subgroup& h) const {
  if (h.g_ != g_) return false;
  return std::all_of(h.elems_.begin(), h.elems_.end(), [&](Elem x) { return member_[x]; });
}

bool Subgroup::is_normal_in(const Subgroup& k) const {
  if (!k.contains(*this)) return false;
  for (auto g : k.gens_)
    for (auto x : gens_)
      if (!member_[g_->conj(g, x)]) return false;
  return true;
}

SubgroupPtr Subgroup::conjugate(Elem g) const {
  std::vector<Elem> out;
  out.reserve(elems_.size());
  for (auto x : elems_) out.push_back(g_->conj(g, x));
  std::sort(out.begin(), out.end());
  return SubgroupPtr(new Subgroup(g_, std::move(out)));
}

SubgroupPtr Subgroup::intersect(const Subgroup& o) const {
  require_same_group(*this, o);
  std::vector<Elem> out;
  for (auto x : elems_)
    if (o.member_[x]) out.push_back(x);
  return SubgroupPtr(new Subgroup(g_, std::move(out)));
}

std::vector<SubgroupPtr> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<FiniteGroup::Elem>> seen;
  std::vector<SubgroupPtr> subs;
  auto add = [&](std::vector<FiniteGroup::Elem> elems) {
    if (seen.insert(elems).second) subs.push_back(SubgroupPtr(new Subgroup(g, std::move(elems))));
  };
  // Every subgroup is a join of cyclic subgroups.
  for (FiniteGroup::Elem x = 0; x < g->order(); ++x) add(closure(*g, {x}));
  std::vector<SubgroupPtr> cyclic = subs;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& c : cyclic) {
      if (subs[i]->contains(*c)) continue;
      auto gens = subs[i]->generators();
      gens.insert(gens.end(), c->generators().begin(), c->generators().end());
      add(closure(*g, gens));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const SubgroupPtr& a, const SubgroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return a->elements() < b->elements();
  });
  return subs;
}

std::vector<SubgroupPtr> subgroups_of(const std::vector<SubgroupPtr>& all, const Subgroup& k) {
  std::vector<SubgroupPtr> out;
  for (const auto& h : all)
    if (k.contains(*h)) out.push_back(h);
  return out;
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(SubgroupPtr domain, std::vector<Cyclo> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  require(values_.size() == domain_->class_count(), Errc::DimensionMismatch, "one value per class required");
  const auto phi = domain_->group()->ring().phi();
  for (const auto& v : values_) require(v.size() == phi, Errc::DimensionMismatch, "cyclotomic coordinate count");
}

std::optional<std::int64_t> ClassFunction::degree() const {
  return domain_->group()->ring().as_integer(values_[domain_->class_of(0)]);
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require(*domain_ == *o.domain_, Errc::DimensionMismatch, "class functions on different subgroups");
  const auto& ring = domain_->group()->ring();
  std::vector<Cyclo> v;
  for (std::size_t i = 0; i < values_.size(); ++i) v.push_back(ring.add(values_[i], o.values_[i]));
  return ClassFunction(domain_, std::move(v));
}

ClassFunction ClassFunction::trivial(const SubgroupPtr& h) {
  return ClassFunction(h, std::vector<Cyclo>(h->class_count(), h->group()->ring().integer(1)));
}

ClassFunction ClassFunction::regular(const SubgroupPtr& h) {
  const auto& ring = h->group()->ring();
  std::vector<Cyclo> v(h->class_count(), ring.zero());
  v[h->class_of(0)] = ring.integer(static_cast<std::int64_t>(h->order()));
  return ClassFunction(h, std::move(v));
}

ClassFunction ClassFunction::indicator(const SubgroupPtr& h, std::size_t c) {
  const auto& ring = h->group()->ring();
  std::vector<Cyclo> v(h->class_count(), ring.zero());
  v.at(c) = ring.integer(1);
  return ClassFunction(h, std::move(v));
}

std::optional<std::int64_t> CycloRational::as_integer(const CycloRing& ring) const {
  auto v = ring.as_integer(num);
  if (!v || *v % den != 0) return std::nullopt;
  return *v / den;
}

ClassFunction induce(const SubgroupPtr& k, const ClassFunction& chi) {
  const auto& h = *chi.domain();
  require_same_group(*k, h);
  require(k->contains(h), Errc::NotSubgroup, "induction from a non-subgroup");
  const auto& G = *k->group();
  const auto& ring = G.ring();
  std::vector<Cyclo> v;
  v.reserve(k->class_count());
  for (const auto& cls : k->classes()) {
    const auto x = cls.front();
    Cyclo sum = ring.zero();
    for (auto g : k->elements()) {
      const auto y = G.conj(G.inv(g), x);  // g^-1 x g
      if (h.contains(y)) sum = ring.add(sum, chi.at(y));
    }
    auto q = ring.divide(sum, static_cast<std::int64_t>(h.order()));
    require(q.has_value(), Errc::WitnessCheckFailed, "induced value not divisible by |H|");
    v.push_back(std::move(*q));
  }
  return ClassFunction(k, std::move(v));
}

ClassFunction restrict(const ClassFunction& phi, const SubgroupPtr& h) {
  const auto& k = *phi.domain();
  require_same_group(k, *h);
  require(k.contains(*h), Errc::NotSubgroup, "restriction to a non-subgroup");
  std::vector<Cyclo> v;
  for (const auto& cls : h->classes()) v.push_back(phi.at(cls.front()));
  return ClassFunction(h, std::move(v));
}

CycloRational inner_product(const ClassFunction& phi1, const ClassFunction& phi2) {
  require(*phi1.domain() == *phi2.domain(), Errc::DimensionMismatch, "inner product across different subgroups");
  const auto& h = *phi1.domain();
  const auto& G = *h.group();
  const auto& ring = G.ring();
  Cyclo sum = ring.zero();
  for (const auto& cls : h.classes()) {
    const auto x = cls.front();
    const auto term = ring.mul(phi1.at(G.inv(x)), phi2.at(x));
    sum = ring.add(sum, ring.scale(term, static_cast<std::int64_t>(cls.size())));
  }
  std::int64_t den = static_cast<std::int64_t>(h.order());
  std::int64_t g = den;
  for (auto c : sum) g = std::gcd(g, c);
  for (auto& c : sum) c /= g;
  return {std::move(sum), den / g};
}

std::vector<FiniteGroup::Elem> double_cosets(const Subgroup& k, const Subgroup& h, const Subgroup& n) {
  require_same_group(k, h);
  require_same_group(k, n);
  require(k.contains(h) && k.contains(n), Errc::NotSubgroup, "double cosets need subgroups of the ambient");
  const auto& G = *k.group();
  std::vector<bool> done(G.order(), false);
  std::vector<FiniteGroup::Elem> reps;
  for (auto x : k.elements()) {
    if (done[x]) continue;
    reps.push_back(x);
    for (auto a : h.elements())
      for (auto b : n.elements()) done[G.mul(G.mul(a, x), b)] = true;
  }
  return reps;
}

ClassFunction conjugate_character(const ClassFunction& chi, FiniteGroup::Elem g) {
  const auto& n = *chi.domain();
  const auto& G = *n.group();
  auto target = n.conjugate(g);
  std::vector<Cyclo> v;
  for (const auto& cls : target->classes()) v.push_back(chi.at(G.conj(G.inv(g), cls.front())));
  return ClassFunction(target, std::move(v));
}

bool mackey_check(const SubgroupPtr& k, const SubgroupPtr& h, const ClassFunction& chi) {
  const auto& n = chi.domain();
  const auto lhs = restrict(induce(k, chi), h);
  const auto& ring = k->group()->ring();
  std::vector<Cyclo> acc(h->class_count(), ring.zero());
  for (auto gamma : double_cosets(*k, *h, *n)) {
    const auto conj = conjugate_character(chi, gamma);
    const auto meet = h->intersect(*conj.domain());
    const auto piece = induce(h, restrict(conj, meet));
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = ring.add(acc[i], piece.values()[i]);
  }
  return lhs.values() == acc;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t position(const Subgroup& h, FiniteGroup::Elem x) {
  const auto& e = h.elements();
  return static_cast<std::size_t>(std::lower_bound(e.begin(), e.end(), x) - e.begin());
}

}  // namespace

ClassFunction LinearCharacter::as_class_function() const {
  const auto& ring = domain->group()->ring();
  std::vector<Cyclo> v;
  for (const auto& cls : domain->classes()) v.push_back(ring.root(at(cls.front())));
  return ClassFunction(domain, std::move(v));
}

std::uint64_t LinearCharacter::at(FiniteGroup::Elem x) const { return exponent[position(*domain, x)]; }

LinearCharacter LinearCharacter::power(std::uint64_t e) const {
  const auto m = domain->group()->exponent();
  LinearCharacter out{domain, exponent, order / std::gcd(order, e)};
  for (auto& x : out.exponent) x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * (e % m)) % m);
  return out;
}

std::vector<LinearCharacter> linear_characters(const SubgroupPtr& h) {
  const auto& G = *h->group();
  const auto m = G.exponent();
  const auto& gens = h->generators();
  std::vector<std::uint64_t> choice(gens.size(), 0);  // zeta^(choice_i * m / ord(g_i))
  std::vector<LinearCharacter> out;
  std::vector<std::uint64_t> val(h->order());
  std::vector<bool> set(h->order());
  while (true) {
    std::fill(set.begin(), set.end(), false);
    val[0] = 0;
    set[0] = true;
    bool ok = true;
    std::deque<FiniteGroup::Elem> queue{0};
    while (ok && !queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      const auto vx = val[position(*h, x)];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const auto y = G.mul(x, gens[i]);
        const auto py = position(*h, y);
        const auto vy = (vx + choice[i] * (m / G.elem_order(gens[i]))) % m;
        if (!set[py]) {
          set[py] = true;
          val[py] = vy;
          queue.push_back(y);
        } else if (val[py] != vy) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::uint64_t ord = 1;
      for (auto v : val) ord = std::lcm(ord, m / std::gcd(m, v));
      out.push_back({h, val, ord});
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++choice[i] < G.elem_order(gens[i])) break;
      choice[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

IrreducibleSet induced_irreducibles(const SubgroupPtr& h, const std::vector<SubgroupPtr>& all) {
  IrreducibleSet out;
  const auto& ring = h->group()->ring();
  std::int64_t squares = 0;
  for (const auto& k : subgroups_of(all, *h)) {
    for (const auto& lambda : linear_characters(k)) {
      auto chi = induce(h, lambda.as_class_function());
      if (inner_product(chi, chi).as_integer(ring) != 1) continue;
      if (std::find(out.characters.begin(), out.characters.end(), chi) != out.characters.end()) continue;
      const auto d = *chi.degree();
      squares += d * d;
      out.characters.push_back(std::move(chi));
    }
  }
  out.complete = squares == static_cast<std::int64_t>(h->order());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void hypothesis(const std::string& clause) { throw Error(Errc::HypothesisFailed, clause); }

std::uint64_t index_of(const Subgroup& g, const Subgroup& h) { return g.order() / h.order(); }

// p-part of a linear character, chi_1 = chi^u with u = 1 mod p^a and u = 0 mod b.
LinearCharacter p_part(const LinearCharacter& chi, std::uint64_t p) {
  std::uint64_t pa = 1, b = chi.order;
  while (b % p == 0) {
    b /= p;
    pa *= p;
  }
  if (pa == 1) return chi.power(0);
  const std::uint64_t u = b * nt::inv_mod(b % pa, pa);
  return chi.power(u);
}

// Everything in the proposition's hypotheses that does not involve H or S.
LinearCharacter check_chi_clauses(const SubgroupPtr& g, const SubgroupPtr& n, const LinearCharacter& chi,
                                  std::uint64_t p) {
  require_same_group(*g, *n);
  if (!(*chi.domain == *n)) hypothesis("chi is a character of N");
  if (!n->is_normal_in(*g)) hypothesis("N normal in G");
  const auto idx = index_of(*g, *n);
  if (!nt::is_prime(p)) hypothesis("p prime");
  if (p <= idx) hypothesis("p > n = (G:N)");
  const auto chi1 = p_part(chi, p);
  if (chi1.order == 1) hypothesis("chi_1 of nontrivial p-power order");
  const auto& G = *g->group();
  // the conjugates chi_1^sigma over coset representatives of G/N
  std::vector<bool> covered(G.order(), false);
  std::vector<std::vector<std::uint64_t>> seen;
  for (auto s : g->elements()) {
    if (covered[s]) continue;
    for (auto x : n->elements()) covered[G.mul(s, x)] = true;
    std::vector<std::uint64_t> e;
    for (auto y : n->elements()) e.push_back(chi1.at(G.conj(G.inv(s), y)));
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) hypothesis("conjugates of chi_1 pairwise distinct");
    seen.push_back(std::move(e));
  }
  return chi1;
}

}  // namespace

PropVerdict verify_prop_nh(const SubgroupPtr& g, const SubgroupPtr& n, const SubgroupPtr& h, const LinearCharacter& chi,
                           const ClassFunction& s, std::uint64_t p) {
  require_same_group(*g, *h);
  require(g->contains(*n) && g->contains(*h), Errc::NotSubgroup, "N and H must lie in G");
  check_chi_clauses(g, n, chi, p);
  if (!(*s.domain() == *h)) hypothesis("S is a character of H");
  const auto deg = s.degree();
  if (!deg || *deg <= 0) hypothesis("S is a character of H");
  if (!(induce(g, s) == induce(g, chi.as_class_function()))) hypothesis("Ind_H S = Ind_N chi");
  return h->contains(*n) ? PropVerdict::Holds : PropVerdict::Counterexample;
}

bool check_res_nontrivial(const SubgroupPtr& g, const SubgroupPtr& n, const SubgroupPtr& h, const LinearCharacter& chi,
                          std::uint64_t p, std::uint64_t index_bound) {
  require_same_group(*g, *n);
  require_same_group(*g, *h);
  require(g->contains(*n) && g->contains(*h), Errc::NotSubgroup, "N and H must lie in G");
  if (!(*chi.domain == *n)) hypothesis("chi is a character of N");
  if (!n->is_normal_in(*g)) hypothesis("N normal in G");
  if (index_of(*g, *h) > index_bound) hypothesis("(G:H) <= n");
  if (!nt::is_prime(p)) hypothesis("p prime");
  if (p <= index_bound) hypothesis("p > n");
  std::uint64_t o = chi.order;
  while (o % p == 0) o /= p;
  if (chi.order == 1 || o != 1) hypothesis("chi of nontrivial p-power order");
  const auto meet = h->intersect(*n);
  for (auto x : meet->elements())
    if (chi.at(x) != 0) return true;
  return false;
}

SweepReport sweep_prop_nh(const GroupPtr& group, const SubgroupPtr& normal, std::optional<std::uint64_t> p) {
  SweepReport rep;
  const auto g = Subgroup::whole(group);
  const auto all = all_subgroups(group);
  std::vector<SubgroupPtr> ns;
  if (normal) {
    require(normal->group() == group, Errc::NotSubgroup, "N lies in another group");
    ns.push_back(normal);
  } else {
    for (const auto& s : all)
      if (s->is_normal_in(*g)) ns.push_back(s);
  }
  std::map<std::size_t, IrreducibleSet> irr;  // by position in all
  auto irreducibles = [&](std::size_t i) -> const IrreducibleSet& {
    auto it = irr.find(i);
    if (it == irr.end()) {
      it = irr.emplace(i, induced_irreducibles(all[i], all)).first;
      if (!it->second.complete) ++rep.incomplete_bases;
    }
    return it->second;
  };
  std::set<std::string> reasons;
  for (const auto& n : ns) {
    std::vector<std::uint64_t> primes = p ? std::vector<std::uint64_t>{*p} : nt::prime_divisors(n->order());
    const auto chars = linear_characters(n);
    for (auto prime : primes) {
      for (const auto& chi : chars) {
        try {
          check_chi_clauses(g, n, chi, prime);
        } catch (const Error& e) {
          ++rep.skipped;
          const std::string msg = e.what();
          reasons.insert("|N| = " + std::to_string(n->order()) + ", p = " + std::to_string(prime) + ": " +
                         msg.substr(msg.find(": ") + 2));
          continue;
        }
        ++rep.configurations;
        const auto target = induce(g, chi.as_class_function());
        const auto deg = *target.degree();
        for (std::size_t i = 0; i < all.size(); ++i) {
          const auto& h = all[i];
          const auto idx = static_cast<std::int64_t>(index_of(*g, *h));
          if (deg % idx != 0) continue;
          for (const auto& s : irreducibles(i).characters) {
            if (*s.degree() * idx != deg || !(induce(g, s) == target)) continue;
            ++rep.matches;
            if (verify_prop_nh(g, n, h, chi, s, prime) == PropVerdict::Holds)
              ++rep.holds;
            else
              ++rep.counterexamples;
          }
        }
      }
    }
  }
  rep.skip_reasons.assign(reasons.begin(), reasons.end());
  return rep;
}

RestrictionReport sweep_res_nontrivial(const GroupPtr& group) {
  RestrictionReport rep;
  const auto g = Subgroup::whole(group);
  const auto all = all_subgroups(group);
  for (const auto& n : all) {
    if (!n->is_normal_in(*g)) continue;
    for (const auto& chi : linear_characters(n)) {
      const auto primes = nt::prime_divisors(chi.order);
      if (primes.size() != 1) continue;
      const auto p = primes.front();
      for (const auto& h : all) {
        const auto idx = index_of(*g, *h);
        if (idx >= p) continue;
        ++rep.checked;
        if (!check_res_nontrivial(g, n, h, chi, p, idx)) ++rep.trivial;
      }
    }
  }
  return rep;
}

IdentitySweep sweep_mackey_identity(const GroupPtr& group) {
  IdentitySweep out;
  const auto g = Subgroup::whole(group);
  const auto all = all_subgroups(group);
  for (const auto& h : all)
    for (const auto& n : all)
      for (std::size_t c = 0; c < n->class_count(); ++c) {
        ++out.checked;
        if (!mackey_check(g, h, ClassFunction::indicator(n, c))) ++out.failures;
      }
  return out;
}

IdentitySweep sweep_frobenius(const GroupPtr& group) {
  IdentitySweep out;
  const auto g = Subgroup::whole(group);
  for (const auto& h : all_subgroups(group))
    for (std::size_t i = 0; i < h->class_count(); ++i) {
      const auto psi = ClassFunction::indicator(h, i);
      const auto ind = induce(g, psi);
      for (std::size_t j = 0; j < g->class_count(); ++j) {
        const auto phi = ClassFunction::indicator(g, j);
        const auto a = inner_product(ind, phi), b = inner_product(psi, restrict(phi, h));
        ++out.checked;
        if (a.num != b.num || a.den != b.den) ++out.failures;
      }
    }
  return out;
}

std::vector<std::vector<std::uint32_t>> frobenius_generators(std::uint32_t p, std::uint32_t r) {
  std::vector<std::uint32_t> shift(p), scale(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * x) % p);
  }
  return {shift, scale};
}

const std::vector<NamedGroup>& fixture_groups() {
  static const std::vector<NamedGroup> groups = {
      {"C2xC2", {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"C6", {{1, 2, 3, 4, 5, 0}}},
      {"S3", {{1, 2, 0}, {1, 0, 2}}},
      {"D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}},
      {"Q8", {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}},
      {"D5", {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}},
      {"A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}},
      {"D6", {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}},
      {"C3:C4", {{1, 2, 0, 3, 4, 5, 6}, {0, 2, 1, 4, 5, 6, 3}}},
      {"C7:C3", frobenius_generators(7, 2)},
      {"S4", {{1, 2, 3, 0}, {1, 0, 2, 3}}},
      {"C13:C4", frobenius_generators(13, 5)},
      {"C11:C5", frobenius_generators(11, 3)},
      {"A5", {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}},
  };
  return groups;
}

}  // namespace sympal

#include "sympal/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "sympal/numtheory.hpp"

namespace sympal {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo a monic divisor, coefficients mod ell.
Poly poly_rem(Poly a, const Poly& monic, std::uint32_t ell) {
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < dm; ++i) {
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + static_cast<std::uint64_t>(ell - lead) * monic[i]) % ell);
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// a * b mod modulus, where a and b are residues of length r.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t ell) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % ell);
    }
  }
  Poly r = poly_rem(std::move(prod), modulus, ell);
  r.resize(modulus.size() - 1, 0);
  return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t ell) {
  Poly result(modulus.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, modulus, ell);
    base = poly_mulmod(base, base, modulus, ell);
    e >>= 1;
  }
  return result;
}

// Digits of k in base ell, most significant first, length r: the lexicographic
// enumeration with c_0 as the most significant coefficient.
Poly lex_coeffs(std::uint64_t k, std::uint32_t ell, std::uint32_t r) {
  Poly c(r, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    c[r - 1 - i] = static_cast<std::uint32_t>(k % ell);
    k /= ell;
  }
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t ell) {
  const std::uint32_t r = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= r / 2; ++d) {
    const std::uint64_t count = *nt::checked_pow(ell, d);
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g = lex_coeffs(k, ell, d);
      g.push_back(1);
      if (poly_is_zero(poly_rem(f, g, ell))) return false;
    }
  }
  return true;
}

std::uint32_t encode(const Poly& c, std::uint32_t ell) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * ell + c[i];
  return v;
}

}  // namespace

std::vector<std::uint32_t> canonical_modulus(std::uint32_t ell, std::uint32_t degree) {
  if (!nt::is_prime(ell)) throw Error(Errc::NotPrime, std::to_string(ell) + " is not prime");
  if (degree == 0) throw Error(Errc::InvalidParams, "field degree must be positive");
  if (degree == 1) return {0, 1};
  auto count = nt::checked_pow(ell, degree);
  if (!count || *count > Field::kMaxOrder) {
    throw Error(Errc::FieldTooLarge, "field order exceeds " + std::to_string(Field::kMaxOrder));
  }
  for (std::uint64_t k = 0; k < *count; ++k) {
    Poly f = lex_coeffs(k, ell, degree);
    if (f[0] == 0) continue;  // divisible by x
    f.push_back(1);
    if (is_irreducible(f, ell)) return f;
  }
  throw Error(Errc::InvalidParams, "no irreducible polynomial found");
}

Field::Field(std::uint32_t ell, std::uint32_t degree, std::vector<std::uint32_t> modulus)
    : ell_(ell), degree_(degree), modulus_(std::move(modulus)) {
  auto q = nt::checked_pow(ell, degree);
  if (!q || *q > kMaxOrder) {
    throw Error(Errc::FieldTooLarge, "field order exceeds " + std::to_string(kMaxOrder));
  }
  order_ = static_cast<std::uint32_t>(*q);
  const std::uint64_t group = order_ - 1;
  const auto primes = group > 1 ? nt::prime_divisors(group) : std::vector<std::uint64_t>{};

  if (degree_ == 1) {
    generator_ = 1;
    for (std::uint32_t g = 1; g < order_; ++g) {
      bool full = std::all_of(primes.begin(), primes.end(),
                              [&](std::uint64_t p) { return nt::pow_mod(g, group / p, ell) != 1; });
      if (full) {
        generator_ = g;
        break;
      }
    }
  } else {
    bool found = false;
    for (std::uint64_t k = 1; k < order_ && !found; ++k) {
      Poly c = lex_coeffs(k, ell, degree);
      bool full = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
        Poly r = poly_powmod(c, group / p, modulus_, ell);
        return !(r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](std::uint32_t x) { return x == 0; }));
      });
      if (full) {
        generator_ = encode(c, ell);
        found = true;
      }
    }
    if (!found) throw Error(Errc::InvalidParams, "modulus is not irreducible");
  }

  exp_.assign(2 * group + 1, 0);
  log_.assign(order_, 0);
  if (degree_ == 1) {
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      exp_[k] = static_cast<Elem>(x);
      log_[x] = static_cast<std::uint32_t>(k);
      x = x * generator_ % ell;
    }
  } else {
    Poly g = coeffs(generator_);
    Poly x(degree_, 0);
    x[0] = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      const Elem v = encode(x, ell);
      exp_[k] = v;
      log_[v] = static_cast<std::uint32_t>(k);
      x = poly_mulmod(x, g, modulus_, ell);
    }
  }
  for (std::uint64_t k = group; k < exp_.size(); ++k) exp_[k] = exp_[k - group];

  if (degree_ > 1) {
    neg_table_.resize(order_);
    for (Elem a = 0; a < order_; ++a) {
      Poly c = coeffs(a);
      for (auto& x : c) x = x == 0 ? 0 : ell - x;
      neg_table_[a] = encode(c, ell);
    }
    if (order_ <= 1024) {
      add_table_.resize(static_cast<std::size_t>(order_) * order_);
      for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b) add_table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
    }
  }
}

FieldSpec Field::make(std::uint32_t ell, std::uint32_t degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldSpec> registry;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({ell, degree});
    if (it != registry.end()) return it->second;
  }
  auto modulus = canonical_modulus(ell, degree);
  auto spec = std::make_shared<const Field>(ell, degree, std::move(modulus));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(std::make_pair(ell, degree), spec);
  return it->second;
}

Field::Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem result = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    Elem s = a % ell_ + b % ell_;
    if (s >= ell_) s -= ell_;
    result += s * place;
    place *= ell_;
    a /= ell_;
    b /= ell_;
  }
  return result;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroArgument, "inverse of zero");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[nt::mul_mod(log_[a], e % group, group)];
}

Field::Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(ell_);
  if (r < 0) r += ell_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(degree_, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = a % ell_;
    a /= ell_;
  }
  return c;
}

Field::Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != degree_) {
    throw Error(Errc::Parse, "field element needs " + std::to_string(degree_) + " coefficients, got " +
                                 std::to_string(c.size()));
  }
  for (auto x : c) {
    if (x >= ell_) throw Error(Errc::Parse, "coefficient " + std::to_string(x) + " not reduced mod ell");
  }
  return encode(Poly(c.begin(), c.end()), ell_);
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroArgument, "log of zero");
  return log_[a];
}

std::uint64_t Field::mult_order(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroArgument, "order of zero");
  const std::uint64_t group = order_ - 1;
  return group / nt::gcd(log_[a], group);
}

std::uint32_t Field::canonical_rank(Elem a) const noexcept {
  std::uint32_t rank = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    rank = rank * ell_ + a % ell_;
    a /= ell_;
  }
  return rank;
}

// --- FieldElement ------------------------------------------------------------

FieldElement::FieldElement(FieldSpec spec, Field::Elem value) : spec_(std::move(spec)), value_(value) {
  if (!spec_) throw Error(Errc::InvalidParams, "null field spec");
  if (value_ >= spec_->order()) throw Error(Errc::Parse, "element index out of range");
}

FieldElement FieldElement::from_coeffs(FieldSpec spec, std::span<const std::uint32_t> coeffs) {
  const auto v = spec->from_coeffs(coeffs);
  return {std::move(spec), v};
}

FieldElement FieldElement::from_int(FieldSpec spec, std::int64_t v) {
  const auto e = spec->from_int(v);
  return {std::move(spec), e};
}

void FieldElement::same_field(const FieldElement& o) const {
  if (spec_ != o.spec_) throw Error(Errc::MixedField, "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {spec_, spec_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {spec_, spec_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {spec_, spec_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  same_field(o);
  return {spec_, spec_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_->pow(value_, e)}; }

// --- free operations -----------------------------------------------------------

FieldSpec field_make(std::uint32_t ell, std::uint32_t degree) { return Field::make(ell, degree); }

FieldElement mult_generator(const FieldSpec& spec) { return {spec, spec->generator()}; }

std::uint64_t discrete_log(const FieldElement& x, const FieldElement& g) {
  if (x.spec() != g.spec()) throw Error(Errc::MixedField, "discrete_log operands in different fields");
  const auto& f = *x.spec();
  if (x.is_zero()) throw Error(Errc::ZeroArgument, "discrete log of zero");
  if (g.is_zero() || f.mult_order(g.value()) != f.order() - 1) {
    throw Error(Errc::NotGenerator, "base is not a multiplicative generator");
  }
  const std::uint64_t group = f.order() - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));
  std::unordered_map<Field::Elem, std::uint64_t> baby;
  baby.reserve(m);
  Field::Elem cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = f.mul(cur, g.value());
  }
  const Field::Elem giant = f.inv(f.pow(g.value(), m));
  Field::Elem gamma = x.value();
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % group;
    gamma = f.mul(gamma, giant);
  }
  throw Error(Errc::NotGenerator, "discrete log not found");
}

FieldElement frobenius(const FieldElement& x) { return {x.spec(), x.spec()->frobenius(x.value())}; }

// --- embeddings -------------------------------------------------------------------

Embedding::Embedding(FieldSpec small, FieldSpec big, Field::Elem root)
    : small_(std::move(small)), big_(std::move(big)), root_(root) {
  const auto& s = *small_;
  const auto& b = *big_;
  std::vector<Field::Elem> powers(s.degree());
  Field::Elem p = 1;
  for (std::uint32_t i = 0; i < s.degree(); ++i) {
    powers[i] = p;
    p = b.mul(p, root_);
  }
  table_.resize(s.order());
  for (Field::Elem a = 0; a < s.order(); ++a) {
    auto c = s.coeffs(a);
    Field::Elem img = 0;
    for (std::uint32_t i = 0; i < s.degree(); ++i) img = b.add(img, b.mul(b.from_int(c[i]), powers[i]));
    table_[a] = img;
  }
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (a.spec() != small_) throw Error(Errc::MixedField, "element not in embedding source");
  return {big_, table_[a.value()]};
}

FieldElement Embedding::image_of_generator() const { return {big_, table_[small_->generator()]}; }

Embedding Embedding::then_frobenius(unsigned k) const {
  Field::Elem r = root_;
  for (unsigned i = 0; i < k; ++i) r = big_->frobenius(r);
  return {small_, big_, r};
}

namespace {

std::vector<Field::Elem> modulus_roots(const FieldSpec& small, const FieldSpec& big) {
  const auto& b = *big;
  const auto& mod = small->modulus();
  std::vector<std::pair<std::uint32_t, Field::Elem>> roots;
  for (Field::Elem z = 0; z < b.order(); ++z) {
    Field::Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = b.add(b.mul(acc, z), b.from_int(mod[i]));
    if (acc == 0) roots.emplace_back(b.canonical_rank(z), z);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<Field::Elem> out;
  for (auto& [rank, z] : roots) out.push_back(z);
  return out;
}

void check_embeddable(const FieldSpec& small, const FieldSpec& big) {
  if (small->ell() != big->ell() || big->degree() % small->degree() != 0) {
    throw Error(Errc::NoEmbedding, "F_" + std::to_string(small->ell()) + "^" + std::to_string(small->degree()) +
                                       " does not embed in F_" + std::to_string(big->ell()) + "^" +
                                       std::to_string(big->degree()));
  }
}

}  // namespace

Embedding subfield_embed(const FieldSpec& small, const FieldSpec& big) {
  check_embeddable(small, big);
  auto roots = modulus_roots(small, big);
  if (roots.empty()) throw Error(Errc::NoEmbedding, "modulus has no root in target");
  return {small, big, roots.front()};
}

std::vector<Embedding> all_embeddings(const FieldSpec& small, const FieldSpec& big) {
  Embedding first = subfield_embed(small, big);
  std::vector<Embedding> out;
  for (unsigned k = 0; k < small->degree(); ++k) out.push_back(first.then_frobenius(k));
  return out;
}

}  // namespace sympal

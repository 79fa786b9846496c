#include "sympal/groupkit.hpp"

#include <cstring>
#include <fstream>
#include <random>

#include "sympal/numtheory.hpp"

namespace sympal {

namespace {

// out = a * b for n x n entry arrays (row-major).
void mul_entries(const Field& f, std::size_t n, const Field::Elem* a, const Field::Elem* b, Field::Elem* out) {
  if (f.is_prime_field()) {
    const std::uint64_t p = f.ell();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j];
        out[i * n + j] = static_cast<Field::Elem>(s % p);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Field::Elem s = 0;
      for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(a[i * n + k], b[k * n + j]));
      out[i * n + j] = s;
    }
  }
}

constexpr char kMagic[8] = {'S', 'Y', 'M', 'P', 'A', 'L', 'E', '1'};

}  // namespace

// --- ElementSet ------------------------------------------------------------------

ElementSet::ElementSet(FieldSpec field, std::size_t n)
    : field_(std::move(field)),
      n_(n),
      packed_(nt::checked_pow(field_->order(), static_cast<unsigned>(n * n)).has_value()),
      packed_keys_(std::make_unique<std::vector<std::uint64_t>>()),
      packed_index_(0, KeyHash{packed_keys_.get()}, KeyEq{packed_keys_.get()}) {}

std::uint64_t ElementSet::pack(std::span<const Field::Elem> entries) const {
  std::uint64_t key = 0;
  const std::uint64_t q = field_->order();
  for (std::size_t i = entries.size(); i-- > 0;) key = key * q + entries[i];
  return key;
}

std::string ElementSet::wide_key(std::span<const Field::Elem> entries) const {
  std::string key(entries.size() * sizeof(Field::Elem), '\0');
  std::memcpy(key.data(), entries.data(), key.size());
  return key;
}

void ElementSet::unpack(std::size_t i, std::span<Field::Elem> out) const {
  if (packed_) {
    std::uint64_t key = (*packed_keys_)[i];
    const std::uint64_t q = field_->order();
    for (auto& e : out) {
      e = static_cast<Field::Elem>(key % q);
      key /= q;
    }
  } else {
    std::memcpy(out.data(), wide_keys_[i].data(), wide_keys_[i].size());
  }
}

Matrix ElementSet::matrix(std::size_t i) const {
  std::vector<Field::Elem> entries(n_ * n_);
  unpack(i, entries);
  return {field_, n_, n_, std::move(entries)};
}

std::optional<std::size_t> ElementSet::index_of(const Matrix& m) const {
  if (m.field() != field_ || m.rows() != n_ || m.cols() != n_) return std::nullopt;
  if (packed_) {
    auto it = packed_index_.find(pack(m.data()));
    if (it == packed_index_.end()) return std::nullopt;
    return *it;
  }
  auto it = wide_index_.find(wide_key(m.data()));
  if (it == wide_index_.end()) return std::nullopt;
  return it->second;
}

bool ElementSet::insert(std::span<const Field::Elem> entries) {
  if (packed_) {
    const std::uint64_t key = pack(entries);
    if (packed_index_.contains(key)) return false;
    packed_keys_->push_back(key);
    packed_index_.insert(static_cast<std::uint32_t>(packed_keys_->size() - 1));
    return true;
  }
  std::string key = wide_key(entries);
  auto [it, inserted] = wide_index_.emplace(key, static_cast<std::uint32_t>(wide_keys_.size()));
  if (inserted) wide_keys_.push_back(std::move(key));
  return inserted;
}

void ElementSet::save(const std::filesystem::path& path) const {
  const auto tmp = path.string() + ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(Errc::Parse, "cannot write " + tmp);
    out.write(kMagic, sizeof kMagic);
    const std::uint64_t header[5] = {field_->ell(), field_->degree(), n_, packed_ ? 1u : 0u, size()};
    out.write(reinterpret_cast<const char*>(header), sizeof header);
    std::vector<Field::Elem> entries(n_ * n_);
    for (std::size_t i = 0; i < size(); ++i) {
      unpack(i, entries);
      out.write(reinterpret_cast<const char*>(entries.data()),
                static_cast<std::streamsize>(entries.size() * sizeof(Field::Elem)));
    }
  }
  std::filesystem::rename(tmp, path);
}

std::shared_ptr<ElementSet> ElementSet::load(const std::filesystem::path& path, FieldSpec field, std::size_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  char magic[sizeof kMagic];
  std::uint64_t header[5];
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(header), sizeof header);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0 || header[0] != field->ell() ||
      header[1] != field->degree() || header[2] != n) {
    return nullptr;
  }
  auto set = std::make_shared<ElementSet>(std::move(field), n);
  std::vector<Field::Elem> entries(n * n);
  for (std::uint64_t i = 0; i < header[4]; ++i) {
    in.read(reinterpret_cast<char*>(entries.data()), static_cast<std::streamsize>(entries.size() * sizeof(Field::Elem)));
    if (!in) return nullptr;
    set->insert(entries);
  }
  return set;
}

// --- MatrixGroup ---------------------------------------------------------------------

MatrixGroup::MatrixGroup(SympSpace space, std::vector<Matrix> generators)
    : space_(std::move(space)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(Errc::InvalidParams, "a matrix group needs at least one generator");
  for (const auto& g : generators_) multiplier_of(space_, g);
}

MatrixGroup MatrixGroup::with_cache(std::shared_ptr<const ElementSet> cache) const {
  MatrixGroup copy = *this;
  copy.cache_ = std::move(cache);
  return copy;
}

std::shared_ptr<const ElementSet> closure_enumerate(const FieldSpec& field, std::size_t n,
                                                    std::span<const Matrix> generators, std::size_t cap) {
  if (cap == 0) throw Error(Errc::InvalidParams, "cap must be positive");
  const Field& f = *field;
  auto set = std::make_shared<ElementSet>(field, n);
  const Matrix id = Matrix::identity(field, n);
  set->insert(id.data());
  std::vector<const Field::Elem*> gens;
  for (const auto& g : generators) gens.push_back(g.data().data());
  std::vector<Field::Elem> x(n * n), y(n * n);
  for (std::size_t i = 0; i < set->size(); ++i) {
    set->unpack(i, x);
    for (const auto* g : gens) {
      mul_entries(f, n, x.data(), g, y.data());
      if (set->insert(y) && set->size() > cap) throw CapExceeded(set->size(), cap);
    }
  }
  return set;
}

std::shared_ptr<const ElementSet> closure_enumerate(const MatrixGroup& g, std::size_t cap) {
  if (g.cache()) {
    if (g.cache()->size() > cap) throw CapExceeded(g.cache()->size(), cap);
    return g.cache();
  }
  return closure_enumerate(g.field(), g.dim(), g.generators(), cap);
}

std::uint64_t group_order(const MatrixGroup& g, std::size_t cap) { return closure_enumerate(g, cap)->size(); }

std::vector<HarvestedTransvection> harvest_transvections(const MatrixGroup& g, std::size_t cap) {
  auto set = closure_enumerate(g, cap);
  std::vector<HarvestedTransvection> out;
  const std::size_t n = g.dim();
  const Field& f = g.space().f();
  std::vector<Field::Elem> x(n * n);
  for (std::size_t i = 0; i < set->size(); ++i) {
    set->unpack(i, x);
    // skip the identity; over prime fields the rank test is cheaper than detection
    bool identity = true;
    for (std::size_t r = 0; r < n && identity; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (x[r * n + c] != (r == c ? 1u : 0u)) {
          identity = false;
          break;
        }
    if (identity) continue;
    Matrix m(g.field(), n, n, x);
    if (f.is_prime_field() && rank(m - Matrix::identity(g.field(), n)) != 1) continue;
    auto res = detect_transvection(g.space(), m);
    if (res.kind == TransvectionKind::Nontrivial) out.push_back({std::move(m), std::move(*res.data)});
  }
  return out;
}

MatrixGroup normal_closure(const MatrixGroup& g, std::span<const Matrix> seeds, std::size_t cap) {
  std::vector<Matrix> gens(seeds.begin(), seeds.end());
  if (gens.empty()) gens.push_back(Matrix::identity(g.field(), g.dim()));
  std::vector<Matrix> conjugators, inverses;
  for (const auto& s : g.generators()) {
    conjugators.push_back(s);
    inverses.push_back(inverse(s));
  }
  while (true) {
    auto set = closure_enumerate(g.field(), g.dim(), gens, cap);
    bool added = false;
    const std::size_t current = gens.size();
    for (std::size_t k = 0; k < conjugators.size(); ++k) {
      for (std::size_t h = 0; h < current; ++h) {
        Matrix c = conjugators[k] * gens[h] * inverses[k];
        if (!set->contains(c)) {
          gens.push_back(std::move(c));
          added = true;
        }
      }
    }
    if (!added) return MatrixGroup(g.space(), std::move(gens)).with_cache(std::move(set));
  }
}

// --- spinning ---------------------------------------------------------------------------

Subspace spin(std::span<const Matrix> generators, const Vec& seed) {
  if (generators.empty()) throw Error(Errc::InvalidParams, "spin needs generators");
  const auto& field = generators.front().field();
  const std::size_t n = generators.front().rows();
  if (seed.size() != n) throw Error(Errc::DimensionMismatch, "seed has wrong length");
  if (vec_is_zero(seed)) throw Error(Errc::ZeroArgument, "spin seed must be nonzero");
  EchelonBasis eb(field, n);
  std::vector<Vec> queue{seed};
  eb.insert(seed);
  for (std::size_t i = 0; i < queue.size() && eb.size() < n; ++i) {
    for (const auto& g : generators) {
      Vec w = mat_vec(g, queue[i]);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::from_basis(eb.reduced());
}

namespace {

// Proper invariant subspace reached from any of the seeds, if one exists.
std::optional<Subspace> proper_spin(std::span<const Matrix> gens, std::span<const Vec> seeds) {
  for (const auto& s : seeds) {
    Subspace w = spin(gens, s);
    if (w.dim() < w.ambient_dim()) return w;
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityResult is_irreducible(const FieldSpec& field, std::size_t n, std::span<const Matrix> generators,
                                    const IrreducibilityOptions& opts) {
  const Field& f = *field;
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seeds.push_back(std::move(e));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Field::Elem> coeff(0, f.order() - 1);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Vec v(n);
    do {
      for (auto& x : v) x = coeff(rng);
    } while (vec_is_zero(v));
    seeds.push_back(std::move(v));
  }

  if (auto w = proper_spin(generators, seeds)) return {Irreducibility::Reducible, std::move(w)};

  // A proper subspace invariant under the transposes has an invariant annihilator.
  std::vector<Matrix> dual;
  for (const auto& g : generators) dual.push_back(transpose(g));
  if (auto w = proper_spin(dual, seeds)) {
    return {Irreducibility::Reducible, Subspace::from_basis(nullspace(w->basis()))};
  }

  auto count = nt::checked_pow(f.order(), static_cast<unsigned>(n));
  if (!count || *count > opts.scan_limit) return {Irreducibility::Unverified, std::nullopt};

  // one representative per line: leading coordinate 1 at position p
  Vec v(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t tail = n - p - 1;
    const std::uint64_t combos = *nt::checked_pow(f.order(), static_cast<unsigned>(tail));
    for (std::uint64_t k = 0; k < combos; ++k) {
      std::fill(v.begin(), v.end(), 0);
      v[p] = 1;
      std::uint64_t rest = k;
      for (std::size_t j = p + 1; j < n; ++j) {
        v[j] = static_cast<Field::Elem>(rest % f.order());
        rest /= f.order();
      }
      Subspace w = spin(generators, v);
      if (w.dim() < n) return {Irreducibility::Reducible, std::move(w)};
    }
  }
  return {Irreducibility::Irreducible, std::nullopt};
}

IrreducibilityResult is_irreducible(const MatrixGroup& g, const IrreducibilityOptions& opts) {
  return is_irreducible(g.field(), g.dim(), g.generators(), opts);
}

Matrix restrict_action(const Matrix& a, const Subspace& u) {
  const std::size_t m = u.dim();
  Matrix r(a.field(), m, m);
  const auto basis = u.vectors();
  for (std::size_t j = 0; j < m; ++j) {
    const Vec c = u.coordinates(mat_vec(a, basis[j]));
    for (std::size_t i = 0; i < m; ++i) r(i, j) = c[i];
  }
  return r;
}

MatrixGroup conjugate(const MatrixGroup& g, const Matrix& a) {
  const Matrix ainv = inverse(a);
  std::vector<Matrix> gens;
  for (const auto& x : g.generators()) gens.push_back(a * x * ainv);
  return {g.space(), std::move(gens)};
}

Matrix random_gsp(const SympSpace& space, std::uint64_t seed, std::size_t transvections) {
  const Field& f = space.f();
  const std::size_t n = space.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Field::Elem> coeff(0, f.order() - 1);
  std::uniform_int_distribution<Field::Elem> unit(1, f.order() - 1);
  Matrix a = Matrix::identity(space.field(), n);
  for (std::size_t t = 0; t < transvections; ++t) {
    Vec v(n);
    do {
      for (auto& x : v) x = coeff(rng);
    } while (vec_is_zero(v));
    a = a * make_transvection(space, v, unit(rng));
  }
  if (space.is_standard()) {
    Matrix d = Matrix::identity(space.field(), n);
    const auto alpha = unit(rng);
    for (std::size_t i = 0; i < n / 2; ++i) d(i, i) = alpha;
    a = a * d;
  }
  return a;
}

}  // namespace sympal

#pragma once

// Finitely generated matrix groups inside GSp(V).

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "sympal/symplectic.hpp"

namespace sympal {

inline constexpr std::size_t kDefaultCap = 20'000'000;

/// Enumerated elements of a matrix group in breadth-first order (identity first).
///
/// Elements are keyed by their entry sequence: packed base-q into 64 bits when
/// q^(n*n) fits, otherwise as a byte string of the entries.
class ElementSet {
 public:
  ElementSet(FieldSpec field, std::size_t n);
  ElementSet(const ElementSet&) = delete;
  ElementSet& operator=(const ElementSet&) = delete;

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return packed_ ? packed_keys_->size() : wide_keys_.size(); }
  bool packed() const noexcept { return packed_; }

  Matrix matrix(std::size_t i) const;
  std::optional<std::size_t> index_of(const Matrix& m) const;
  bool contains(const Matrix& m) const { return index_of(m).has_value(); }

  /// Inserts if new; returns true when inserted.
  bool insert(std::span<const Field::Elem> entries);
  void unpack(std::size_t i, std::span<Field::Elem> out) const;

  void save(const std::filesystem::path& path) const;
  /// Null when the file is missing, truncated or written for another field or dimension.
  static std::shared_ptr<ElementSet> load(const std::filesystem::path& path, FieldSpec field, std::size_t n);

 private:
  struct KeyHash {
    using is_transparent = void;
    const std::vector<std::uint64_t>* keys;
    std::size_t operator()(std::uint32_t i) const { return absl::Hash<std::uint64_t>{}((*keys)[i]); }
    std::size_t operator()(std::uint64_t k) const { return absl::Hash<std::uint64_t>{}(k); }
  };
  struct KeyEq {
    using is_transparent = void;
    const std::vector<std::uint64_t>* keys;
    std::uint64_t key(std::uint32_t i) const { return (*keys)[i]; }
    std::uint64_t key(std::uint64_t k) const { return k; }
    template <class A, class B>
    bool operator()(A a, B b) const {
      return key(a) == key(b);
    }
  };

  std::uint64_t pack(std::span<const Field::Elem> entries) const;
  std::string wide_key(std::span<const Field::Elem> entries) const;

  FieldSpec field_;
  std::size_t n_;
  bool packed_;
  // heap-held so the index functors can keep a stable pointer to it
  std::unique_ptr<std::vector<std::uint64_t>> packed_keys_;
  absl::flat_hash_set<std::uint32_t, KeyHash, KeyEq> packed_index_;
  std::vector<std::string> wide_keys_;
  absl::flat_hash_map<std::string, std::uint32_t> wide_index_;
};

class MatrixGroup {
 public:
  /// Validates that every generator is an invertible similitude of the space.
  MatrixGroup(SympSpace space, std::vector<Matrix> generators);

  const SympSpace& space() const noexcept { return space_; }
  const FieldSpec& field() const noexcept { return space_.field(); }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }

  const std::shared_ptr<const ElementSet>& cache() const noexcept { return cache_; }
  MatrixGroup with_cache(std::shared_ptr<const ElementSet> cache) const;

 private:
  SympSpace space_;
  std::vector<Matrix> generators_;
  std::shared_ptr<const ElementSet> cache_;
};

/// All elements of <generators>; throws CapExceeded when more than cap elements exist.
std::shared_ptr<const ElementSet> closure_enumerate(const MatrixGroup& g, std::size_t cap = kDefaultCap);
std::shared_ptr<const ElementSet> closure_enumerate(const FieldSpec& field, std::size_t n,
                                                    std::span<const Matrix> generators,
                                                    std::size_t cap = kDefaultCap);
std::uint64_t group_order(const MatrixGroup& g, std::size_t cap = kDefaultCap);

struct HarvestedTransvection {
  Matrix matrix;
  TransvectionData data;
};
std::vector<HarvestedTransvection> harvest_transvections(const MatrixGroup& g, std::size_t cap = kDefaultCap);

/// Smallest subgroup containing seeds that is normalised by the generators of g.
/// The result carries its enumeration as cache.
MatrixGroup normal_closure(const MatrixGroup& g, std::span<const Matrix> seeds, std::size_t cap = kDefaultCap);

/// Smallest subspace containing seed and invariant under every generator.
Subspace spin(std::span<const Matrix> generators, const Vec& seed);

enum class Irreducibility { Irreducible, Reducible, Unverified };

struct IrreducibilityResult {
  Irreducibility status;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace when Reducible
  bool irreducible() const noexcept { return status == Irreducibility::Irreducible; }
};

struct IrreducibilityOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  /// Exhaustive line scan runs when q^n is at most this many vectors.
  std::uint64_t scan_limit = 1'000'000;
};

IrreducibilityResult is_irreducible(const FieldSpec& field, std::size_t n, std::span<const Matrix> generators,
                                    const IrreducibilityOptions& opts = {});
IrreducibilityResult is_irreducible(const MatrixGroup& g, const IrreducibilityOptions& opts = {});

/// Matrix of a on the invariant subspace u, in u's stored basis (columns are images).
Matrix restrict_action(const Matrix& a, const Subspace& u);

/// Generators A g A^{-1}; the space is kept since A is a similitude.
MatrixGroup conjugate(const MatrixGroup& g, const Matrix& a);

/// Random element of GSp(V): a product of random transvections times a similitude
/// of random multiplier (standard form only for the similitude factor).
Matrix random_gsp(const SympSpace& space, std::uint64_t seed, std::size_t transvections = 12);

}  // namespace sympal

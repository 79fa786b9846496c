#pragma once

// Fixture groups and brute-force enumerators shared by the unit and acceptance tests.

#include <algorithm>
#include <set>
#include <vector>

#include "sympal/groupkit.hpp"

namespace fixtures {

using namespace sympal;

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == f.order()) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// One vector per line: first nonzero coordinate equal to 1.
inline std::vector<Vec> line_reps(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  for (auto& v : all_vectors(f, n)) {
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it != v.end() && *it == 1) out.push_back(v);
  }
  return out;
}

/// Every subspace of F^n, built by adjoining lines to smaller subspaces.
inline std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t n) {
  const auto lines = line_reps(*field, n);
  std::vector<Subspace> out{Subspace(field, n)};
  std::set<std::vector<Field::Elem>> seen{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].dim() == n) continue;
    for (const auto& l : lines) {
      if (out[i].contains(l)) continue;
      auto vs = out[i].vectors();
      vs.push_back(l);
      Subspace s = Subspace::span(field, n, vs);
      std::vector<Field::Elem> key(s.basis().data().begin(), s.basis().data().end());
      key.insert(key.begin(), static_cast<Field::Elem>(s.dim()));
      if (seen.insert(key).second) out.push_back(std::move(s));
    }
  }
  return out;
}

/// <T_{e1}[a], T_{f1}[b]> in the standard plane.
inline MatrixGroup sp2(const FieldSpec& field, Field::Elem a = 1, Field::Elem b = 1) {
  auto space = SympSpace::standard(field, 2);
  return MatrixGroup(space, {make_transvection(space, unit_vec(2, 0), a), make_transvection(space, unit_vec(2, 1), b)});
}

/// Sp_2(F_q) for any q: the second parameter is the field generator so the closure is not a subfield group.
inline MatrixGroup sp2_full(const FieldSpec& field) { return sp2(field, 1, mult_generator(field).value()); }

/// Sp_4(F_q) from five transvections over the prime field.
inline MatrixGroup sp4(const FieldSpec& field) {
  auto space = SympSpace::standard(field, 4);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(make_transvection(space, unit_vec(4, i), 1));
  Vec mixed{1, 0, 0, 1};  // e1 + f2
  gens.push_back(make_transvection(space, mixed, 1));
  return MatrixGroup(space, std::move(gens));
}

/// Sp_2 x Sp_2 on the planes <e1,f1>, <e2,f2> extended by the swap of the planes.
inline MatrixGroup induced_sp4(const FieldSpec& field) {
  auto space = SympSpace::standard(field, 4);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(make_transvection(space, unit_vec(4, i), 1));
  Matrix swap(field, 4, 4);
  swap(1, 0) = swap(0, 1) = swap(3, 2) = swap(2, 3) = 1;
  gens.push_back(swap);
  return MatrixGroup(space, std::move(gens));
}

inline MatrixGroup reducible_sp2(const FieldSpec& field) {
  auto space = SympSpace::standard(field, 2);
  return MatrixGroup(space, {make_transvection(space, unit_vec(2, 0), 1)});
}

/// <T_{e1}, T_{f1}, T_{e2}>: fixes the line through e2.
inline MatrixGroup reducible_sp4(const FieldSpec& field) {
  auto space = SympSpace::standard(field, 4);
  return MatrixGroup(space, {make_transvection(space, unit_vec(4, 0), 1), make_transvection(space, unit_vec(4, 2), 1),
                             make_transvection(space, unit_vec(4, 1), 1)});
}

/// Sp_2(F_ell) realised inside GSp_2 of the extension field through the prime-field inclusion.
inline MatrixGroup sp2_prime_in(const FieldSpec& big) { return sp2(big, 1, 1); }

}  // namespace fixtures

#include "sympal/classify.hpp"

#include <algorithm>

namespace sympal {

namespace {

[[noreturn]] void witness_failure(const std::string& what) { throw Error(Errc::WitnessCheckFailed, what); }

std::optional<std::size_t> find_block(const std::vector<Subspace>& blocks, const Subspace& s) {
  for (std::size_t j = 0; j < blocks.size(); ++j)
    if (blocks[j] == s) return j;
  return std::nullopt;
}

// Orbit of w under the generators, breadth first; action[k][i] is the image index.
Induced block_orbit(const MatrixGroup& g, const Subspace& w) {
  Induced out;
  out.blocks.push_back(w);
  out.action.assign(g.generators().size(), {});
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Subspace img = out.blocks[i].image(g.generators()[k]);
      auto j = find_block(out.blocks, img);
      if (!j) {
        j = out.blocks.size();
        out.blocks.push_back(std::move(img));
      }
      out.action[k].push_back(*j);
    }
  }
  out.m = w.dim();
  out.h = out.blocks.size();
  return out;
}

void verify_induced(const MatrixGroup& g, const Induced& v) {
  const SympSpace& sp = g.space();
  const std::size_t n = g.dim();
  if (v.blocks.size() != v.h || v.h * v.m != n) witness_failure("block count and dimension do not tile V");
  std::vector<Vec> all;
  for (const auto& b : v.blocks) {
    if (b.dim() != v.m) witness_failure("blocks of unequal dimension");
    if (!is_nonsingular_subspace(sp, b)) witness_failure("singular block");
    for (auto& x : b.vectors()) all.push_back(std::move(x));
  }
  if (Subspace::span(g.field(), n, all).dim() != n) witness_failure("blocks do not span V");
  for (std::size_t i = 0; i < v.h; ++i)
    for (std::size_t j = i + 1; j < v.h; ++j)
      for (const auto& x : v.blocks[i].vectors())
        for (const auto& y : v.blocks[j].vectors())
          if (sp.form(x, y) != 0) witness_failure("blocks not orthogonal");
  if (v.action.size() != g.generators().size()) witness_failure("action table size");
  // generators permute the blocks; the orbit of S_1 is everything
  std::vector<bool> reached(v.h, false);
  reached[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < v.action.size(); ++k) {
    if (v.action[k].size() != v.h) witness_failure("action table size");
    std::vector<bool> hit(v.h, false);
    for (std::size_t i = 0; i < v.h; ++i) {
      const std::size_t j = v.action[k][i];
      if (j >= v.h || hit[j] || !(v.blocks[i].image(g.generators()[k]) == v.blocks[j]))
        witness_failure("generator does not permute the blocks");
      hit[j] = true;
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& row : v.action)
      if (!reached[row[queue[q]]]) {
        reached[row[queue[q]]] = true;
        queue.push_back(row[queue[q]]);
      }
  if (queue.size() != v.h) witness_failure("block action is not transitive");
}

unsigned match_subfield(const Field& f, std::size_t n, std::uint64_t order) {
  for (unsigned d = 1; d <= f.degree(); ++d) {
    if (f.degree() % d != 0) continue;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d; ++i) q *= f.ell();
    if (sp_order(n, q) == order) return d;
  }
  throw Error(Errc::NoOrderMatch, "order " + std::to_string(order) + " is not |Sp_" + std::to_string(n) +
                                      "| over any subfield");
}

void require_char(const MatrixGroup& g) {
  if (g.space().f().ell() < 5) throw Error(Errc::CharTooSmall, "characteristic must be at least 5");
}

}  // namespace

std::string_view case_name(const Classification& c) noexcept {
  static constexpr std::string_view names[] = {"reducible", "induced", "huge"};
  return names[c.index()];
}

Classification classify(const MatrixGroup& g0, std::size_t cap) {
  require_char(g0);
  const MatrixGroup g = g0.with_cache(closure_enumerate(g0, cap));
  const auto harvested = harvest_transvections(g, cap);
  if (harvested.empty()) throw Error(Errc::NoTransvection, "group contains no nontrivial transvection");

  auto irr = is_irreducible(g);
  if (irr.status == Irreducibility::Unverified) throw Error(Errc::Unverified, "irreducibility of G not decided");
  if (irr.status == Irreducibility::Reducible) {
    Classification out = Reducible{std::move(*irr.witness)};
    verify_classification(g, out);
    return out;
  }

  // H = <transvections of G>, built from a greedy generating subset
  std::vector<Matrix> hgens;
  std::shared_ptr<const ElementSet> hset;
  for (const auto& t : harvested) {
    if (hset && hset->contains(t.matrix)) continue;
    hgens.push_back(t.matrix);
    hset = closure_enumerate(g.field(), g.dim(), hgens, cap);
  }
  const MatrixGroup h = MatrixGroup(g.space(), hgens).with_cache(hset);

  auto hirr = is_irreducible(h);
  if (hirr.status == Irreducibility::Unverified) throw Error(Errc::Unverified, "irreducibility of H not decided");
  if (hirr.status == Irreducibility::Reducible) {
    // the H-submodule through a transvection direction is a block of the Clifford decomposition
    const Subspace w = spin(h.generators(), harvested.front().data.direction);
    Classification out = block_orbit(g, w);
    verify_classification(g, out);
    return out;
  }
  Classification out = Huge{match_subfield(g.space().f(), g.dim(), hset->size()), hset->size()};
  verify_classification(g, out);
  return out;
}

unsigned recognize_sp_over_subfield(const MatrixGroup& h, std::size_t cap) {
  require_char(h);
  return match_subfield(h.space().f(), h.dim(), group_order(h, cap));
}

bool is_huge(const MatrixGroup& g, std::size_t cap) {
  const auto c = classify(g, cap);
  const auto* huge = std::get_if<Huge>(&c);
  if (!huge) return false;
  const auto floor = sp_order(g.dim(), g.space().f().ell());
  if (!floor || huge->transvection_subgroup_order < *floor) witness_failure("huge verdict below |Sp_n(ell)|");
  return true;
}

void verify_classification(const MatrixGroup& g, const Classification& c) {
  if (const auto* r = std::get_if<Reducible>(&c)) {
    if (r->witness.dim() == 0 || r->witness.dim() >= g.dim()) witness_failure("witness is not proper");
    for (const auto& x : g.generators())
      if (!stabilizes(x, r->witness)) witness_failure("witness is not invariant");
  } else if (const auto* ind = std::get_if<Induced>(&c)) {
    verify_induced(g, *ind);
  } else {
    const auto& hu = std::get<Huge>(c);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < hu.subfield_degree; ++i) q *= g.space().f().ell();
    if (g.space().f().degree() % hu.subfield_degree != 0 || sp_order(g.dim(), q) != hu.transvection_subgroup_order)
      witness_failure("huge order does not match the subfield formula");
  }
}

InductionData extract_induction(const MatrixGroup& g0, const Induced& v, std::size_t cap) {
  const MatrixGroup g = g0.cache() ? g0 : g0.with_cache(closure_enumerate(g0, cap));
  verify_induced(g, v);
  const auto& field = g.field();
  const Field& f = *field;
  const std::size_t n = g.dim();
  const auto& gens = g.generators();

  InductionData out;
  out.transversal.assign(v.h, Matrix());
  out.transversal[0] = Matrix::identity(field, n);
  std::vector<std::size_t> queue{0};
  std::vector<bool> done(v.h, false);
  done[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t i = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t j = v.action[k][i];
      if (done[j]) continue;
      done[j] = true;
      out.transversal[j] = gens[k] * out.transversal[i];
      queue.push_back(j);
    }
  }
  std::vector<Matrix> tinv;
  for (const auto& t : out.transversal) tinv.push_back(inverse(t));

  // Schreier generators t_{s(i)}^{-1} g t_i
  const Subspace& s1 = v.blocks[0];
  for (std::size_t i = 0; i < v.h; ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Matrix s = tinv[v.action[k][i]] * gens[k] * out.transversal[i];
      if (s.is_identity()) continue;
      if (std::find(out.stabilizer_generators.begin(), out.stabilizer_generators.end(), s) !=
          out.stabilizer_generators.end())
        continue;
      if (!(s1.image(s) == s1)) witness_failure("Schreier generator leaves S_1");
      out.stabilizer_generators.push_back(std::move(s));
    }
  }
  if (out.stabilizer_generators.empty()) out.stabilizer_generators.push_back(Matrix::identity(field, n));
  for (const auto& s : out.stabilizer_generators) out.block_action.push_back(restrict_action(s, s1));

  // index and the induced-character identity, pointwise over G
  const auto& set = *g.cache();
  std::uint64_t stab = 0;
  for (std::size_t e = 0; e < set.size(); ++e) {
    const Matrix x = set.matrix(e);
    Field::Elem induced = 0;
    for (std::size_t i = 0; i < v.h; ++i) {
      if (!(v.blocks[i].image(x) == v.blocks[i])) continue;
      if (i == 0) ++stab;
      induced = f.add(induced, trace(restrict_action(tinv[i] * x * out.transversal[i], s1)));
    }
    if (induced != trace(x)) witness_failure("induced character differs from the character of G");
  }
  out.stabilizer_order = stab;
  out.index = set.size() / stab;
  if (out.index * stab != set.size() || out.index != v.h) witness_failure("stabiliser index differs from h");
  if (closure_enumerate(field, n, out.stabilizer_generators, cap)->size() != stab)
    witness_failure("Schreier generators do not generate the stabiliser");
  return out;
}

}  // namespace sympal

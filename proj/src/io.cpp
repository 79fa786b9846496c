#include "sympal/io.hpp"

#include <fstream>
#include <sstream>

#include "sympal/error.hpp"

namespace sympal::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T number(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (j.get<std::int64_t>() < 0 && !j.is_number_unsigned()) bad(std::string(what) + " must be nonnegative");
  }
  return j.get<T>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

// Library errors raised while building objects from a document are input errors.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) throw;
    throw Error(Errc::Parse, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json to_json(const FieldSpec& f) { return {{"ell", f->ell()}, {"degree", f->degree()}}; }

FieldSpec field_from_json(const Json& j) {
  const auto ell = number<std::uint32_t>(field(j, "ell"), "ell");
  const auto degree = j.contains("degree") ? number<std::uint32_t>(j.at("degree"), "degree") : 1u;
  return guarded([&] { return field_make(ell, degree); });
}

Json element_to_json(const Field& f, Field::Elem x) { return f.coeffs(x); }

Field::Elem element_from_json(const FieldSpec& f, const Json& j) {
  array(j, "field element");
  if (j.size() != f->degree()) bad("field element needs " + std::to_string(f->degree()) + " coefficients");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const auto v = number<std::uint32_t>(x, "coefficient");
    if (v >= f->ell()) bad("coefficient outside [0, ell)");
    c.push_back(v);
  }
  return f->from_coeffs(c);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.f(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows, std::size_t cols) {
  array(j, "matrix");
  if (j.size() != rows) bad("matrix needs " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    array(j[i], "matrix row");
    if (j[i].size() != cols) bad("matrix row needs " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(f, j[i][k]);
  }
  return m;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

Subspace subspace_from_json(const FieldSpec& f, const Json& j, std::size_t ambient) {
  array(j, "subspace");
  return Subspace::from_basis(matrix_from_json(f, j, j.size(), ambient));
}

Json to_json(const MatrixGroup& g) {
  Json gens = Json::array();
  for (const auto& a : g.generators()) gens.push_back(to_json(a));
  return {{"field", to_json(g.field())},
          {"n", g.dim()},
          {"gram", g.space().is_standard() ? Json("standard") : to_json(g.space().gram())},
          {"generators", std::move(gens)}};
}

MatrixGroup group_from_json(const Json& j) {
  const auto f = field_from_json(field(j, "field"));
  const auto n = number<std::size_t>(field(j, "n"), "n");
  if (n == 0 || n % 2 != 0) bad("n must be positive and even");
  const auto& gram = field(j, "gram");
  return guarded([&] {
    auto space = [&] {
      if (!gram.is_string()) return SympSpace(f, matrix_from_json(f, gram, n, n));
      if (gram.get<std::string>() != "standard") bad("unknown gram keyword");
      return SympSpace::standard(f, n);
    }();
    std::vector<Matrix> gens;
    for (const auto& a : array(field(j, "generators"), "generators")) gens.push_back(matrix_from_json(f, a, n, n));
    return MatrixGroup(std::move(space), std::move(gens));
  });
}

Json to_json(const Classification& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Reducible>) {
          return {{"case", "reducible"}, {"witness", to_json(v.witness)}};
        } else if constexpr (std::is_same_v<T, Induced>) {
          Json blocks = Json::array();
          for (const auto& b : v.blocks) blocks.push_back(to_json(b));
          return {{"case", "induced"}, {"m", v.m}, {"h", v.h}, {"blocks", std::move(blocks)}, {"action", v.action}};
        } else {
          return {{"case", "huge"},
                  {"subfield_degree", v.subfield_degree},
                  {"transvection_subgroup_order", v.transvection_subgroup_order}};
        }
      },
      c);
}

Classification classification_from_json(const FieldSpec& f, std::size_t n, const Json& j) {
  return guarded([&]() -> Classification {
    const auto tag = field(j, "case").get<std::string>();
    if (tag == "reducible") return Reducible{subspace_from_json(f, field(j, "witness"), n)};
    if (tag == "induced") {
      Induced v;
      v.m = number<std::size_t>(field(j, "m"), "m");
      v.h = number<std::size_t>(field(j, "h"), "h");
      for (const auto& b : array(field(j, "blocks"), "blocks")) v.blocks.push_back(subspace_from_json(f, b, n));
      v.action = field(j, "action").get<std::vector<std::vector<std::size_t>>>();
      return v;
    }
    if (tag == "huge")
      return Huge{number<unsigned>(field(j, "subfield_degree"), "subfield_degree"),
                  number<std::uint64_t>(field(j, "transvection_subgroup_order"), "transvection_subgroup_order")};
    bad("unknown case \"" + tag + "\"");
  });
}

Json to_json(const WeightProfile& p) {
  Json parts = Json::array();
  for (const auto& part : p.parts) parts.push_back({{"niveau", part.niveau}, {"weights", part.weights}});
  return {{"ell", p.ell}, {"n", p.n}, {"parts", std::move(parts)}};
}

WeightProfile profile_from_json(const Json& j) {
  WeightProfile p;
  p.ell = number<std::uint64_t>(field(j, "ell"), "ell");
  p.n = number<unsigned>(field(j, "n"), "n");
  for (const auto& part : array(field(j, "parts"), "parts")) {
    ProfilePart pp;
    pp.niveau = number<unsigned>(field(part, "niveau"), "niveau");
    for (const auto& w : array(field(part, "weights"), "weights")) pp.weights.push_back(number<std::uint64_t>(w, "weight"));
    p.parts.push_back(std::move(pp));
  }
  // structural violations are malformed input
  const auto check = validate_profile(p);
  if (!check.ok) bad("invalid profile: " + check.violation);
  return p;
}

Json to_json(const Collision& c) {
  auto ch = [](const NiveauCharacter& x) { return Json{{"niveau", x.niveau}, {"exponent", x.exponent.str()}}; };
  return {{"first", c.first},
          {"second", c.second},
          {"a", ch(c.a)},
          {"b", ch(c.b)},
          {"lifted_niveau", c.lifted_niveau},
          {"lifted_a", c.lifted_a.str()},
          {"lifted_b", c.lifted_b.str()}};
}

Json to_json(const NpGroup& g) {
  Json out = to_json(g.group());
  const auto& p = g.chi.params;
  out["form"] = to_json(g.form);
  out["params"] = {{"n", p.n}, {"q", p.q}, {"p", p.p}, {"ell", p.ell}, {"m", p.m}};
  out["alpha"] = element_to_json(*g.chi.field, g.alpha);
  out["irreducibility"] = g.irreducibility == Irreducibility::Irreducible ? "irreducible"
                          : g.irreducibility == Irreducibility::Reducible  ? "reducible"
                                                                           : "unverified";
  return out;
}

GroupPtr finite_group_from_json(const Json& j) {
  return guarded([&]() -> GroupPtr {
    if (j.contains("fixture")) {
      const auto name = j.at("fixture").get<std::string>();
      for (const auto& g : fixture_groups())
        if (g.name == name) return FiniteGroup::from_permutations(g.generators);
      bad("unknown fixture group \"" + name + "\"");
    }
    if (j.contains("permutations"))
      return FiniteGroup::from_permutations(j.at("permutations").get<std::vector<std::vector<std::uint32_t>>>());
    if (j.contains("table")) return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<std::uint32_t>>>());
    bad("group needs \"fixture\", \"permutations\" or \"table\"");
  });
}

SubgroupPtr subgroup_from_json(const GroupPtr& g, const Json& j) {
  return guarded([&]() -> SubgroupPtr {
    if (j.contains("elements"))
      return Subgroup::from_elements(g, j.at("elements").get<std::vector<FiniteGroup::Elem>>());
    if (j.contains("generators")) {
      const auto& perms = g->permutations();
      if (perms.empty()) bad("subgroup generators need a permutation group; use \"elements\"");
      std::vector<FiniteGroup::Elem> gens;
      for (const auto& p : j.at("generators").get<std::vector<std::vector<std::uint32_t>>>()) {
        auto it = std::find(perms.begin(), perms.end(), p);
        if (it == perms.end()) bad("subgroup generator is not in the group");
        gens.push_back(static_cast<FiniteGroup::Elem>(it - perms.begin()));
      }
      return Subgroup::generated(g, gens);
    }
    bad("subgroup needs \"generators\" or \"elements\"");
  });
}

Json to_json(const SweepReport& r) {
  return {{"configurations", r.configurations}, {"matches", r.matches},
          {"holds", r.holds},                   {"counterexamples", r.counterexamples},
          {"skipped", r.skipped},               {"incomplete_bases", r.incomplete_bases},
          {"skip_reasons", r.skip_reasons}};
}

Json to_json(const RestrictionReport& r) { return {{"checked", r.checked}, {"trivial", r.trivial}}; }

Json to_json(const IdentitySweep& r) { return {{"checked", r.checked}, {"failures", r.failures}}; }

}  // namespace sympal::io

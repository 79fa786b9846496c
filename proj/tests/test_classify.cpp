#include "doctest.h"
#include "fixtures.hpp"
#include "sympal/classify.hpp"

using namespace sympal;
using fixtures::unit_vec;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

MatrixGroup np_group_f7() {
  auto f7 = field_make(7, 1);
  Matrix d(f7, 2, 2), fr(f7, 2, 2);
  d(0, 0) = 2, d(1, 1) = 4;
  fr(0, 1) = 6, fr(1, 0) = 1;
  return MatrixGroup(SympSpace::standard(f7, 2), {d, fr});
}

}  // namespace

TEST_CASE("reducible verdicts") {
  auto f5 = field_make(5, 1);
  auto c = classify(fixtures::reducible_sp2(f5));
  REQUIRE(std::holds_alternative<Reducible>(c));
  std::vector<Vec> e1{unit_vec(2, 0)};
  CHECK(std::get<Reducible>(c).witness == Subspace::span(f5, 2, e1));
  CHECK(case_name(c) == "reducible");

  auto c4 = classify(fixtures::reducible_sp4(f5));
  REQUIRE(std::holds_alternative<Reducible>(c4));
  CHECK_FALSE(is_huge(fixtures::reducible_sp4(f5)));
}

TEST_CASE("induced verdict on the two-plane fixture") {
  auto f5 = field_make(5, 1);
  auto g = fixtures::induced_sp4(f5);
  CHECK(group_order(g) == 28800);  // (120 * 120) * 2
  auto c = classify(g);
  REQUIRE(std::holds_alternative<Induced>(c));
  const auto& ind = std::get<Induced>(c);
  CHECK(ind.h == 2);
  CHECK(ind.m == 2);
  std::vector<Vec> p1{unit_vec(4, 0), unit_vec(4, 2)}, p2{unit_vec(4, 1), unit_vec(4, 3)};
  const auto s1 = Subspace::span(f5, 4, p1), s2 = Subspace::span(f5, 4, p2);
  CHECK(((ind.blocks[0] == s1 && ind.blocks[1] == s2) || (ind.blocks[0] == s2 && ind.blocks[1] == s1)));
  CHECK(ind.action.back() == std::vector<std::size_t>{1, 0});  // the swap
  CHECK_FALSE(is_huge(g));
}

TEST_CASE("huge verdicts and subfield degrees") {
  auto f5 = field_make(5, 1), f25 = field_make(5, 2), f7 = field_make(7, 1);
  auto c = classify(fixtures::sp2(f5));
  REQUIRE(std::holds_alternative<Huge>(c));
  CHECK(std::get<Huge>(c).subfield_degree == 1);
  CHECK(std::get<Huge>(c).transvection_subgroup_order == 120);
  CHECK(is_huge(fixtures::sp2(f5)));
  CHECK(is_huge(fixtures::sp2(f7)));

  CHECK(recognize_sp_over_subfield(fixtures::sp2_full(f25)) == 2);
  CHECK(recognize_sp_over_subfield(fixtures::sp2_prime_in(f25)) == 1);
  auto c25 = classify(fixtures::sp2_full(f25));
  REQUIRE(std::holds_alternative<Huge>(c25));
  CHECK(std::get<Huge>(c25).subfield_degree == 2);
  CHECK(std::get<Huge>(c25).transvection_subgroup_order == 15600);

  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto g = fixtures::sp2_prime_in(f25);
    auto a = random_gsp(g.space(), seed);
    CHECK(recognize_sp_over_subfield(conjugate(g, a)) == 1);
  }
  // the reducible group has order 5, which is no |Sp_2(5^d)|
  CHECK(code_of([&] { recognize_sp_over_subfield(fixtures::reducible_sp2(f5)); }) == Errc::NoOrderMatch);
}

TEST_CASE("precondition errors") {
  auto f3 = field_make(3, 1);
  CHECK(code_of([&] { classify(fixtures::sp2(f3)); }) == Errc::CharTooSmall);
  CHECK(code_of([&] { classify(np_group_f7()); }) == Errc::NoTransvection);
  CHECK(code_of([&] { classify(fixtures::sp2(field_make(5, 1)), 50); }) == Errc::CapExceeded);
}

TEST_CASE("huge verdicts are idempotent under harvesting") {
  for (auto g : {fixtures::sp2(field_make(5, 1)), fixtures::sp2_full(field_make(5, 2))}) {
    auto c = classify(g);
    REQUIRE(std::holds_alternative<Huge>(c));
    std::vector<Matrix> ts;
    for (const auto& t : harvest_transvections(g)) ts.push_back(t.matrix);
    CHECK(closure_enumerate(g.field(), g.dim(), ts)->size() == std::get<Huge>(c).transvection_subgroup_order);
  }
}

TEST_CASE("conjugation invariance") {
  auto f5 = field_make(5, 1), f7 = field_make(7, 1);
  std::vector<MatrixGroup> groups{fixtures::reducible_sp2(f5), fixtures::reducible_sp4(f5), fixtures::induced_sp4(f5),
                                  fixtures::sp2(f7), fixtures::sp2_full(field_make(5, 2))};
  for (const auto& g : groups) {
    const auto base = classify(g);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Matrix a = random_gsp(g.space(), seed);
      const auto c = classify(conjugate(g, a));
      REQUIRE(c.index() == base.index());
      const Matrix ainv = inverse(a);
      if (const auto* r = std::get_if<Reducible>(&c)) {
        const Subspace back = r->witness.image(ainv);
        for (const auto& x : g.generators()) CHECK(stabilizes(x, back));
      } else if (const auto* ind = std::get_if<Induced>(&c)) {
        std::vector<Subspace> back;
        for (const auto& b : ind->blocks) back.push_back(b.image(ainv));
        for (const auto& b : std::get<Induced>(base).blocks)
          CHECK(std::find(back.begin(), back.end(), b) != back.end());
      } else {
        CHECK(std::get<Huge>(c).subfield_degree == std::get<Huge>(base).subfield_degree);
      }
    }
  }
}

TEST_CASE("rank-two groups never produce induced blocks") {
  for (auto field : {field_make(5, 1), field_make(7, 1), field_make(11, 1), field_make(5, 2)}) {
    std::vector<MatrixGroup> gs{fixtures::sp2(field), fixtures::reducible_sp2(field), fixtures::sp2_prime_in(field)};
    for (const auto& g : gs) CHECK_FALSE(std::holds_alternative<Induced>(classify(g)));
  }
}

TEST_CASE("every verdict passes its witness checks") {
  auto f7 = field_make(7, 1);
  std::vector<MatrixGroup> gs{fixtures::induced_sp4(f7), fixtures::reducible_sp4(f7), fixtures::sp2(f7)};
  for (const auto& g : gs) {
    const auto c = classify(g);
    CHECK_NOTHROW(verify_classification(g, c));
  }
  auto ind = classify(fixtures::induced_sp4(f7));
  CHECK(case_name(ind) == "induced");
  // a tampered verdict is rejected
  auto bad = std::get<Induced>(ind);
  bad.action.back() = {0, 0};
  CHECK(code_of([&] { verify_classification(fixtures::induced_sp4(f7), bad); }) == Errc::WitnessCheckFailed);
  Classification wrong = Huge{1, 121};
  CHECK(code_of([&] { verify_classification(fixtures::sp2(field_make(5, 1)), wrong); }) == Errc::WitnessCheckFailed);
}

TEST_CASE("extract_induction") {
  auto f5 = field_make(5, 1);
  auto g = fixtures::induced_sp4(f5);
  auto c = std::get<Induced>(classify(g));
  auto data = extract_induction(g, c);
  CHECK(data.index == 2);
  CHECK(data.stabilizer_order == 14400);
  for (const auto& m : data.block_action) {
    CHECK(m.rows() == 2);
  }
  // block action generates Sp_2(F_5) on S_1
  CHECK(closure_enumerate(f5, 2, data.block_action)->size() == 120);

  // elements moving both blocks have trace zero
  auto set = closure_enumerate(g);
  std::size_t movers = 0;
  for (std::size_t i = 0; i < set->size(); ++i) {
    const Matrix x = set->matrix(i);
    if (!(c.blocks[0].image(x) == c.blocks[0])) {
      ++movers;
      CHECK(trace(x) == 0);
    }
  }
  CHECK(movers == 14400);

  // h = 1: the whole space as a single block
  auto sp2 = fixtures::sp2(f5);
  Induced whole{{Subspace::whole(f5, 2)}, 2, 1, {{0}, {0}}};
  auto d1 = extract_induction(sp2, whole);
  CHECK(d1.index == 1);
  CHECK(d1.stabilizer_order == 120);
  CHECK(closure_enumerate(f5, 2, d1.stabilizer_generators)->size() == 120);
}

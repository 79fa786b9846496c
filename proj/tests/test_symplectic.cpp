#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sympal/symplectic.hpp"

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

Matrix diag(const FieldSpec& f, std::initializer_list<Field::Elem> d) {
  Matrix m(f, d.size(), d.size());
  std::size_t i = 0;
  for (auto x : d) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("SympSpace validation") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 4);
  CHECK(sp.gram()(0, 2) == 1);
  CHECK(sp.gram()(2, 0) == 4);
  CHECK(sp.form(unit_vec(4, 0), unit_vec(4, 2)) == 1);
  CHECK(code_of([&] { SympSpace::standard(f5, 3); }) == Errc::InvalidParams);
  Matrix sym(f5, 2, 2);
  sym(0, 1) = sym(1, 0) = 1;
  CHECK(code_of([&] { SympSpace(f5, sym); }) == Errc::InvalidParams);
  CHECK(code_of([&] { SympSpace(f5, Matrix(f5, 2, 2)); }) == Errc::Singular);
}

TEST_CASE("multiplier_of") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 2);
  CHECK(multiplier_of(sp, Matrix::identity(f5, 2)) == 1);
  for (Field::Elem c = 1; c < 5; ++c) CHECK(multiplier_of(sp, Matrix::scalar(f5, 2, c)) == f5->mul(c, c));
  // direct evaluation: A^T J A = [[0, 2], [-2, 0]]
  CHECK(multiplier_of(sp, diag(f5, {2, 1})) == 2);
  CHECK(code_of([&] { multiplier_of(sp, Matrix(f5, 2, 2)); }) == Errc::Singular);
  auto sp4 = SympSpace::standard(f5, 4);
  CHECK(code_of([&] { multiplier_of(sp4, diag(f5, {2, 1, 1, 1})); }) == Errc::NotSimilitude);
  CHECK_FALSE(is_similitude(sp4, diag(f5, {2, 1, 1, 1})));
}

TEST_CASE("make_transvection") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 2);
  CHECK(make_transvection(sp, unit_vec(2, 0), 0).is_identity());
  CHECK(make_transvection(sp, Vec{0, 0}, 3).is_identity());
  // e1 -> e1, e2 -> e2 + <e2, e1> e1 = e2 - e1
  auto t = make_transvection(sp, unit_vec(2, 0), 1);
  CHECK(t.col(0) == Vec{1, 0});
  CHECK(t.col(1) == Vec{4, 1});
  for (Field::Elem a = 0; a < 5; ++a)
    for (Field::Elem b = 0; b < 5; ++b)
      CHECK(make_transvection(sp, Vec{1, 3}, a) * make_transvection(sp, Vec{1, 3}, b) ==
            make_transvection(sp, Vec{1, 3}, f5->add(a, b)));
}

TEST_CASE("detect_transvection") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 2);
  CHECK(detect_transvection(sp, Matrix::identity(f5, 2)).kind == TransvectionKind::Trivial);
  auto r = detect_transvection(sp, make_transvection(sp, unit_vec(2, 0), 1));
  REQUIRE(r.kind == TransvectionKind::Nontrivial);
  CHECK(r.data->direction == unit_vec(2, 0));
  CHECK(r.data->parameter == 1);
  CHECK(detect_transvection(sp, diag(f5, {2, 3})).kind == TransvectionKind::NotTransvection);
  // rank one but not symplectic
  CHECK(detect_transvection(sp, diag(f5, {2, 1})).kind == TransvectionKind::NotTransvection);
  // scaled direction: T_{2v}[1] = T_v[4]
  auto s = detect_transvection(sp, make_transvection(sp, Vec{2, 4}, 1));
  REQUIRE(s.kind == TransvectionKind::Nontrivial);
  CHECK(s.data->direction == Vec{1, 2});
  CHECK(s.data->parameter == 4);
}

TEST_CASE("round trip detect(make(v, lambda)) over all of F_25^2 and F_5^4") {
  for (auto [field, n] : {std::pair{field_make(5, 2), std::size_t{2}}, std::pair{field_make(5, 1), std::size_t{4}}}) {
    auto sp = SympSpace::standard(field, n);
    std::size_t count = 0;
    for (const auto& v : fixtures::all_vectors(*field, n)) {
      if (vec_is_zero(v)) continue;
      for (Field::Elem lam = 1; lam < field->order(); lam += 3) {
        auto t = make_transvection(sp, v, lam);
        auto r = detect_transvection(sp, t);
        REQUIRE(r.kind == TransvectionKind::Nontrivial);
        CHECK(make_transvection(sp, r.data->direction, r.data->parameter) == t);
        CHECK(determinant(t) == 1);
        CHECK(multiplier_of(sp, t) == 1);
        ++count;
      }
    }
    CHECK(count > 0);
  }
}

TEST_CASE("perp") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 4);
  CHECK(perp(sp, Subspace(f5, 4)) == Subspace::whole(f5, 4));
  CHECK(perp(sp, Subspace::whole(f5, 4)).dim() == 0);
  std::vector<Vec> e1{unit_vec(4, 0)};
  auto p = perp(sp, Subspace::span(f5, 4, e1));
  CHECK(p.dim() == 3);
  CHECK(p.contains(unit_vec(4, 0)));
  CHECK(p.contains(unit_vec(4, 1)));
  CHECK(p.contains(unit_vec(4, 3)));
  CHECK_FALSE(p.contains(unit_vec(4, 2)));
}

TEST_CASE("is_nonsingular_subspace") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 4);
  std::vector<Vec> line{unit_vec(4, 0)}, plane{unit_vec(4, 0), unit_vec(4, 2)};
  CHECK_FALSE(is_nonsingular_subspace(sp, Subspace::span(f5, 4, line)));
  CHECK(is_nonsingular_subspace(sp, Subspace::span(f5, 4, plane)));

  // U + U^perp = V exactly when U is nonsingular, over all planes of F_5^4
  std::size_t planes = 0;
  for (const auto& u : fixtures::all_subspaces(f5, 4)) {
    if (u.dim() != 2) continue;
    ++planes;
    const auto w = perp(sp, u);
    CHECK(u.dim() + w.dim() == 4);
    CHECK((u.sum(w).dim() == 4) == is_nonsingular_subspace(sp, u));
  }
  CHECK(planes == 806);  // Gaussian binomial [4 choose 2]_5
}

TEST_CASE("stabilizes") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 2);
  std::vector<Vec> e1{unit_vec(2, 0)}, e2{unit_vec(2, 1)};
  auto t = make_transvection(sp, unit_vec(2, 0), 1);
  CHECK(stabilizes(Matrix::identity(f5, 2), Subspace::span(f5, 2, e2)));
  CHECK(stabilizes(t, Subspace::span(f5, 2, e1)));
  CHECK_FALSE(stabilizes(t, Subspace::span(f5, 2, e2)));
}

TEST_CASE("conjugation law A T_u[lambda] A^-1 = T_{Au}[lambda / alpha]") {
  for (auto field : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
    for (std::size_t n : {2, 4}) {
      auto sp = SympSpace::standard(field, n);
      const Field& f = *field;
      std::mt19937_64 rng(n * 1000 + f.order());
      std::uniform_int_distribution<Field::Elem> coeff(0, f.order() - 1), unit(1, f.order() - 1);
      for (int c = 0; c < 200; ++c) {
        const Matrix a = random_gsp(sp, rng());
        const auto alpha = multiplier_of(sp, a);
        Vec u(n);
        for (auto& x : u) x = coeff(rng);
        const auto lam = unit(rng);
        CHECK(a * make_transvection(sp, u, lam) * inverse(a) == make_transvection(sp, mat_vec(a, u), f.div(lam, alpha)));
      }
    }
  }
}

TEST_CASE("stabilised subspaces contain the direction or lie in its perp") {
  auto f5 = field_make(5, 1);
  auto sp = SympSpace::standard(f5, 2);
  const auto subspaces = fixtures::all_subspaces(f5, 2);
  CHECK(subspaces.size() == 8);  // 0, six lines, whole
  for (const auto& u : fixtures::all_vectors(*f5, 2)) {
    if (vec_is_zero(u)) continue;
    for (Field::Elem lam = 1; lam < 5; ++lam) {
      const auto t = make_transvection(sp, u, lam);
      for (const auto& w : subspaces) {
        const auto wp = perp(sp, w);
        if (stabilizes(t, w)) CHECK((w.contains(u) || wp.contains(u)));
        bool identity_on_w = true;
        for (const auto& b : w.vectors()) identity_on_w = identity_on_w && mat_vec(t, b) == b;
        CHECK(wp.contains(u) == identity_on_w);
      }
    }
  }
}

TEST_CASE("sp_order") {
  CHECK(sp_order(2, 5) == 120);
  CHECK(sp_order(2, 7) == 336);
  CHECK(sp_order(2, 25) == 15600);
  CHECK(sp_order(4, 5) == 9'360'000);
  CHECK_FALSE(sp_order(3, 5).has_value());
  CHECK_FALSE(sp_order(40, 1009).has_value());
}

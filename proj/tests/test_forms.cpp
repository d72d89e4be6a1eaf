#include "cubelaw/errors.hpp"
#include "cubelaw/oracle.hpp"
#include "cubelaw/quadratic_form.hpp"
#include "cubelaw/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cubelaw;
using namespace testing_support;

namespace {

QuadForm F(long a, long b, long c) { return make_form(QQ(), a, b, c); }
Mat2 M(long p, long qq, long r, long s) { return {q(p), q(qq), q(r), q(s)}; }

}  // namespace

TEST_CASE("discriminant and primitivity") {
  CHECK(disc_form(F(1, 0, 1)) == q(-4));
  CHECK(disc_form(F(-1, 1, 1)) == q(5));
  CHECK(disc_form(identity_form(ext_q(-4))) == q(-4));
  CHECK_FALSE(is_primitive(F(2, 2, 2)));
  CHECK(is_primitive(F(2, 1, 3)));
  CHECK_FALSE(is_primitive({r2(0, 1), r2(0, 0), r2(0, 1)}));
}

TEST_CASE("action of matrices on forms") {
  CHECK(act_form(F(2, 1, 3), Mat2::identity(QQ())) == F(2, 1, 3));
  CHECK(act_form(F(1, 0, 1), M(0, 1, -1, 0)) == F(1, 0, 1));
  CHECK(act_form(F(1, 0, 5), M(1, 1, 0, 1)) == F(1, 2, 6));
  CHECK_THROWS_AS(act_form(F(1, 0, 5), M(0, 1, 1, 0)), DeterminantNotInUnitGroup);
  CHECK_THROWS_AS(act_form(F(1, 0, 5), Mat2::identity(QQ()), q(-1)), DeterminantNotInUnitGroup);
}

TEST_CASE("identity and inverse forms") {
  CHECK(identity_form(ext_q(-4)) == F(1, 0, 1));
  CHECK(identity_form(ext_q(5)) == F(1, 1, -1));
  CHECK(identity_form(ext_q(-20)) == F(1, 0, 5));
  CHECK(inverse_form(F(1, 0, 1)) == F(1, 0, 1));
  CHECK(inverse_form(F(2, 2, 3)) == F(2, -2, 3));
}

TEST_CASE("forms to ideals and back") {
  auto gi = ext_q(-4);
  OrientedIdeal I = psi_map(F(1, 0, 1), gi);
  CHECK(I.alpha() == xq(gi, 1, 0));
  CHECK(I.beta() == ExtElement::omega(gi));
  CHECK(I.eps() == plus());

  auto e20 = ext_q(-20);
  OrientedIdeal P = psi_map(F(2, 2, 3), e20);
  CHECK(P.alpha() == xq(e20, 2, 0));
  CHECK(P.beta() == xq(e20, -1, 1));
  CHECK(P.eps() == plus());

  // Reduced-cube form -d x^2 + h xy + fg y^2.
  long d = 2, f = -1, g = 3, h = 1;
  auto e = ext_q(h * h + 4 * d * f * g);
  OrientedIdeal J = psi_map(F(-d, h, f * g), e);
  CHECK(J.alpha() == xq(e, -d, 0));
  CHECK(J.beta() == BaseRational(q(1), 2) * (sqrt_d(e) - xq(e, h, 0)));
  CHECK(J.eps() == SignVector({-1}));

  CHECK(phi_map(OrientedIdeal::unit(gi)) == identity_form(gi));
  CHECK(phi_map(I) == F(1, 0, 1));
  // The ideal [2, 1 + sqrt(-5)] has form (4x^2 - 4xy + 6y^2)/2.
  QuadForm p = phi_map(OrientedIdeal::make(xq(e20, 2, 0), xq(e20, 1, 1), plus()));
  CHECK(p == F(2, -2, 3));
  CHECK(equivalent_forms(p, F(2, 2, 3)));

  CHECK_THROWS_AS(psi_map(F(2, 2, 4), e20), NotPrimitive);
  CHECK_THROWS_AS(phi_map(with_eps(OrientedIdeal::unit(gi), minus1())), AlignmentViolated);
}

TEST_CASE("composition examples") {
  auto e20 = ext_q(-20);
  CHECK(equivalent_forms(compose_forms(identity_form(e20), F(2, 2, 3), e20), F(2, 2, 3)));
  CHECK(equivalent_forms(compose_forms(F(2, 2, 3), F(2, 2, 3), e20), F(1, 0, 5)));
  auto e23 = ext_q(-23);
  CHECK(equivalent_forms(compose_forms(F(2, 1, 3), F(2, 1, 3), e23), F(2, -1, 3)));
}

TEST_CASE("reduction") {
  CHECK(reduce_form(F(1, 0, 5)).form == F(1, 0, 5));
  FormReduction r = reduce_form(F(6, 2, 1));
  CHECK(r.form == F(1, 0, 5));
  CHECK(act_form(F(6, 2, 1), r.transform) == r.form);
  FormReduction n = reduce_form(F(-6, 2, -1));
  CHECK(n.form == F(-1, 0, -5));
  CHECK(act_form(F(-6, 2, -1), n.transform) == n.form);

  FormReduction ind = reduce_form(F(3, 2, -3));
  CHECK(is_reduced(ind.form));
  CHECK(act_form(F(3, 2, -3), ind.transform) == ind.form);
  auto cycle = reduction_cycle(ind.form);
  CHECK(!cycle.empty());
  for (const auto& c : cycle) CHECK(is_reduced(c));
  CHECK_THROWS_AS(reduce_form({r2(1, 0), r2(0, 0), r2(1, 0)}), UnsupportedBaseField);
}

TEST_CASE("narrow equivalence") {
  CHECK_FALSE(equivalent_forms(F(1, 0, 5), F(2, 2, 3)));
  CHECK_FALSE(equivalent_forms(F(1, 0, 1), F(-1, 0, -1)));
  // 3 + sqrt10 has norm -1, so at D = 40 the two forms are properly equivalent.
  CHECK(equivalent_forms(F(1, 0, -10), F(-1, 0, 10)));
  CHECK(equivalence_transform(F(1, 0, -10), F(-1, 0, 10)).has_value());
  // Q(sqrt3) has no unit of norm -1.
  CHECK_FALSE(equivalent_forms(F(1, 0, -3), F(-1, 0, 3)));
  CHECK(equivalent_forms(F(2, 3, 4), F(4, -3, 2)));
}

TEST_CASE("enumeration of reduced forms") {
  auto e4 = enumerate_reduced(Int(-4));
  REQUIRE(e4.size() == 2);
  CHECK(e4[0] == F(1, 0, 1));
  CHECK(e4[1] == F(-1, 0, -1));
  auto e23 = enumerate_reduced(Int(-23));
  CHECK(e23.size() == 6);
  CHECK(std::find(e23.begin(), e23.end(), F(1, 1, 6)) != e23.end());
  CHECK(std::find(e23.begin(), e23.end(), F(2, 1, 3)) != e23.end());
  CHECK(std::find(e23.begin(), e23.end(), F(2, -1, 3)) != e23.end());
  auto e20 = enumerate_reduced(Int(-20));
  CHECK(std::find(e20.begin(), e20.end(), F(1, 0, 5)) != e20.end());
  CHECK(std::find(e20.begin(), e20.end(), F(2, 2, 3)) != e20.end());
  CHECK(enumerate_reduced(Int(40)).size() == 2);
  CHECK_THROWS_AS(enumerate_reduced(Int(-12)), NotFundamental);
  CHECK_THROWS_AS(enumerate_reduced(Int(-1000003) * 4), OutOfRange);
  for (long D : {-4L, -20L, -23L, 40L, 5L, -84L, 229L, -3299L}) {
    CHECK(enumerate_reduced(Int(D)) == enumerate_reduced_serial(Int(D)));
  }
}

TEST_CASE("class group tables") {
  struct Case {
    long D;
    std::size_t h;
  };
  for (Case c : {Case{-4, 1}, Case{-20, 2}, Case{-23, 3}, Case{40, 2}, Case{-84, 4}, Case{12, 2}}) {
    ClassGroupTable t = class_group_table(Int(c.D));
    CHECK(t.reps.size() == c.h);
    CHECK(is_group_table(t));
    CHECK(t.oriented_order == static_cast<int>(c.D < 0 ? 2 * c.h : c.h));
    ClassNumberCheck cc = class_number_crosscheck(Int(c.D));
    CHECK(cc.h_forms == static_cast<long>(c.h));
    CHECK(cc.h_composition == static_cast<long>(c.h));
  }
}

TEST_CASE("property: group laws on the Q tier") {
  const long discs[] = {-4, -20, -23, 40, 5, -84, 65, -47};
  for (int trial = 0; trial < 80; ++trial) {
    Sampler s(QQ(), 41, static_cast<std::uint64_t>(trial));
    auto e = ext_q(discs[trial % 8]);
    QuadForm a = s.form(e, 4), b = s.form(e, 4), c = s.form(e, 4);
    CHECK(disc_form(a) == e->d());
    Mat2 T = s.unimodular(4, 2);
    CHECK(equivalent_forms(a, act_form(a, T)));
    auto tr = equivalence_transform(a, act_form(a, T));
    REQUIRE(tr.has_value());
    CHECK(act_form(a, *tr) == act_form(a, T));
    CHECK(equivalent_forms(phi_map(psi_map(a, e)), a));
    CHECK(equivalent_forms(compose_forms(a, b, e), compose_forms(b, a, e)));
    CHECK(equivalent_forms(compose_forms(compose_forms(a, b, e), c, e),
                           compose_forms(a, compose_forms(b, c, e), e)));
    CHECK(equivalent_forms(compose_forms(a, identity_form(e), e), a));
    CHECK(equivalent_forms(compose_forms(a, inverse_form(a), e), identity_form(e)));
    if (e->d().u() < 0 && s.coin()) {
      // Brute-force oracle agrees with reduction on small definite forms.
      QuadForm small = reduce_form(a).form;
      CHECK(brute_force_equivalent(small, act_form(small, s.unimodular(2, 1)), 4));
    }
  }
}

TEST_CASE("property: discriminant scaling and psi validity on both tiers") {
  for (const FieldDescriptor* f : {&QQ(), &R2()}) {
    for (int trial = 0; trial < 60; ++trial) {
      Sampler s(*f, 42, static_cast<std::uint64_t>(trial));
      ReducedCubeSample r = random_fundamental_reduced_cube(s, 3, false);
      BaseElement u = s.tp_unit(1);
      QuadForm Q = s.form(r.ext, u, 3);
      // The final unimodular move may scale by the square of a unit determinant.
      BaseElement ratio = divide_exact(disc_form(Q), u * u * r.ext->d());
      CHECK(is_unit(ratio));
      CHECK(is_totally_positive(ratio));
      CHECK_NOTHROW(psi_map(Q, r.ext));
      Mat2 T = s.unimodular(3, 2);
      BaseElement k = s.tp_unit(1);
      BaseElement dt = T.det();
      CHECK(disc_form(act_form(Q, T, k)) == k * k * dt * dt * disc_form(Q));
    }
  }
}

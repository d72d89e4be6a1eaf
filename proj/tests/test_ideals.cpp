#include "cubelaw/errors.hpp"
#include "cubelaw/oriented_ideal.hpp"
#include "cubelaw/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cubelaw;
using namespace testing_support;

namespace {

OrientedIdeal P20() {
  auto e = ext_q(-20);
  return OrientedIdeal::make(xq(e, 2, 0), xq(e, 1, 1), plus());
}

}  // namespace

TEST_CASE("determinant of the basis matrix") {
  auto e = ext_q(-4);
  CHECK(det_m(OrientedIdeal::unit(e)) == BaseRational(QQ(), 1));
  auto swapped = OrientedIdeal::make(ExtElement::omega(e), xq(e, 1, 0), plus());
  CHECK(det_m(swapped) == BaseRational(QQ(), -1));
  CHECK(det_m(P20()) == BaseRational(QQ(), 2));
}

TEST_CASE("construction validates the ideal") {
  auto e = ext_q(-4);
  CHECK_NOTHROW(OrientedIdeal::make(xq(e, 1, 0), xq(e, 0, 1), plus()));
  CHECK_THROWS_AS(OrientedIdeal::make(xq(e, 1, 0), xq(e, 0, 2), plus()), NotAnIdeal);
  CHECK_THROWS_AS(OrientedIdeal::make(xq(e, 1, 0), xq(e, 1, 0), plus()), DegenerateBasis);
}

TEST_CASE("alignment") {
  auto e = ext_q(-4);
  OrientedIdeal I = OrientedIdeal::unit(e);
  CHECK(align_basis(I).beta() == I.beta());
  OrientedIdeal neg = with_eps(I, minus1());
  OrientedIdeal a = align_basis(neg);
  CHECK(a.alpha() == xq(e, 1, 0));
  CHECK(a.beta() == xq(e, 0, -1));
  CHECK(det_m(a) == BaseRational(QQ(), -1));
}

TEST_CASE("multiplication, inverse and norm at D = -20") {
  auto e = ext_q(-20);
  OrientedIdeal ring = OrientedIdeal::unit(e);
  OrientedIdeal P = P20();
  CHECK(equal_modules(mul_ideals(ring, ring), ring));
  OrientedIdeal P2 = mul_ideals(P, P);
  CHECK(equal_modules(P2, OrientedIdeal::make(xq(e, 2, 0), xq(e, 0, 2), plus())));
  CHECK(equal_modules(mul_ideals(P, ring), P));
  OrientedIdeal inv = inverse_ideal(P);
  CHECK(is_unit_ideal(mul_ideals(P, inv)));
  OrientedIdeal back = inverse_ideal(inv);
  CHECK(equal_modules(back, P));
  CHECK(back.eps() == P.eps());
  CHECK(ideal_norm(ring) == BaseRational(QQ(), 1));
  CHECK(ideal_norm(P) == BaseRational(QQ(), 2));
  CHECK(equal_modules(inverse_ideal(ring), ring));
}

TEST_CASE("principal oriented ideals") {
  auto gi = ext_q(-4);
  OrientedIdeal one = principal_oriented(xq(gi, 1, 0));
  CHECK(one.alpha() == xq(gi, 1, 0));
  CHECK(one.beta() == ExtElement::omega(gi));
  CHECK(one.eps() == plus());
  OrientedIdeal pi = principal_oriented(ExtElement::omega(gi));
  CHECK(pi.alpha() == ExtElement::omega(gi));
  CHECK(pi.beta() == xq(gi, -1, 0));
  CHECK(pi.eps() == plus());
  auto e20 = ext_q(-20);
  CHECK(principal_oriented(ExtElement::omega(e20)).eps() == plus());
  CHECK_THROWS_AS(principal_oriented(xq(gi, 0, 0)), ZeroInput);
}

TEST_CASE("module equality") {
  auto e = ext_q(-4);
  OrientedIdeal ring = OrientedIdeal::unit(e);
  OrientedIdeal swapped = OrientedIdeal::make(ExtElement::omega(e), xq(e, 1, 0), plus());
  CHECK(equal_modules(ring, swapped));
  CHECK_FALSE(equal_modules(OrientedIdeal::make(xq(e, 2, 0), xq(e, 0, 2), plus()), ring));
}

TEST_CASE("principality over Q") {
  auto gi = ext_q(-4);
  PrincipalDecision d = is_oriented_principal(OrientedIdeal::unit(gi));
  CHECK(d.principal);
  REQUIRE(d.witness);
  CHECK(equal_modules(principal_oriented(*d.witness), OrientedIdeal::unit(gi)));
  CHECK_FALSE(is_oriented_principal(P20()).principal);
  OrientedIdeal Pi = OrientedIdeal::make(ExtElement::omega(gi), xq(gi, -1, 0), plus());
  PrincipalDecision di = is_oriented_principal(Pi);
  CHECK(di.principal);
  REQUIRE(di.witness);
  CHECK(equal_modules(principal_oriented(*di.witness), Pi));
  CHECK(sign_vector(rel_norm(*di.witness)) == Pi.eps());

  // Negative orientation on an imaginary field is never principal.
  CHECK_FALSE(is_oriented_principal(with_eps(OrientedIdeal::unit(gi), minus1())).principal);

  // Real fields: the ring with negative orientation is principal exactly when
  // a unit of norm -1 exists (1 + sqrt2 and 3 + sqrt10 do, nothing in Q(sqrt3) does).
  for (long D : {8L, 40L}) {
    CHECK(is_oriented_principal(with_eps(OrientedIdeal::unit(ext_q(D)), minus1())).principal);
  }
  CHECK_FALSE(is_oriented_principal(with_eps(OrientedIdeal::unit(ext_q(12)), minus1())).principal);

  auto r2ext = Extension::make(r2(-3, 0));
  CHECK_THROWS_AS(is_oriented_principal(OrientedIdeal::unit(r2ext)), UnsupportedBaseField);
}

TEST_CASE("property: ideal laws on both tiers") {
  for (const FieldDescriptor* f : {&QQ(), &R2()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Sampler s(*f, 31, static_cast<std::uint64_t>(trial));
      ReducedCubeSample r = random_fundamental_reduced_cube(s, 3, false);
      auto e = r.ext;
      OrientedIdeal I = s.ideal(e), J = s.ideal(e), K = s.ideal(e);

      Mat2 T = s.gl2(3, 2);
      CHECK(det_m(with_basis(I, T)) == BaseRational(T.det()) * det_m(I));
      CHECK(sign_vector(det_m(align_basis(I))) == I.eps());

      OrientedIdeal IJ = mul_ideals(I, J), JI = mul_ideals(J, I);
      CHECK(equal_modules(IJ, JI));
      CHECK(IJ.eps() == I.eps() * J.eps());
      CHECK(equal_modules(mul_ideals(IJ, K), mul_ideals(I, mul_ideals(J, K))));

      OrientedIdeal unit = mul_ideals(I, inverse_ideal(I));
      CHECK(is_unit_ideal(unit));
      CHECK(unit.eps().is_all_positive());
      CHECK(ideal_norm(IJ) == canonical_associate(ideal_norm(I) * ideal_norm(J)));

      ExtElement g = s.ext_element(e, 4, true), h = s.ext_element(e, 4);
      OrientedIdeal pg = principal_oriented(g), ph = principal_oriented(h);
      OrientedIdeal prod = mul_ideals(pg, ph), direct = principal_oriented(g * h);
      CHECK(equal_modules(prod, direct));
      CHECK(prod.eps() == direct.eps());
      CHECK(ideal_norm(pg) == canonical_associate(rel_norm(g)));
      CHECK(contains(pg, g * h));
    }
  }
}

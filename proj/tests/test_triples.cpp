#include "cubelaw/balanced_triple.hpp"
#include "cubelaw/cube_composition.hpp"
#include "cubelaw/errors.hpp"
#include "cubelaw/quadratic_form.hpp"
#include "cubelaw/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cubelaw;
using namespace testing_support;

namespace {

OrientedIdeal P20(const ExtensionPtr& e) {
  return OrientedIdeal::make(xq(e, 2, 0), xq(e, 1, 1), plus());
}

ExtElement gen(const ExtensionPtr& e, long x, long y) { return xq(e, x, y); }

}  // namespace

TEST_CASE("balanced triple validation") {
  auto gi = ext_q(-4);
  OrientedIdeal R = OrientedIdeal::unit(gi);
  BalancedTriple T = make_balanced(R, R, R);
  CHECK(T.witness_u() == q(1));
  OrientedIdeal Ri = OrientedIdeal::make(xq(gi, 0, 1), xq(gi, -1, 0), plus());
  CHECK_NOTHROW(make_balanced(Ri, R, R));
  OrientedIdeal twice = OrientedIdeal::make(xq(gi, 2, 0), xq(gi, 0, 2), plus());
  CHECK_THROWS_AS(make_balanced(twice, R, R), ProductNotUnitIdeal);
  CHECK_THROWS_AS(make_balanced(with_eps(R, minus1()), R, R), MathError);
}

TEST_CASE("triples from pairs") {
  auto gi = ext_q(-4);
  OrientedIdeal R = OrientedIdeal::unit(gi);
  BalancedTriple T = triple_from_pair(R, R);
  CHECK(equal_modules(T[2], R));
  CHECK(T[2].eps() == plus());
  CHECK(triples_equivalent(T, identity_triple(gi)));

  auto e20 = ext_q(-20);
  OrientedIdeal P = P20(e20);
  BalancedTriple TP = triple_from_pair(P, P);
  // P^2 = (2), so the third component is (1/2) O_L.
  OrientedIdeal third_expected =
      scale(OrientedIdeal::unit(e20), ExtElement::scalar(e20, BaseRational(q(1), Int(2))));
  CHECK(equal_modules(TP[2], third_expected));
  CHECK(is_unit_ideal(mul_ideals(mul_ideals(TP[0], TP[1]), TP[2])));
  CHECK_FALSE(triples_equivalent(identity_triple(e20), TP));
}

TEST_CASE("rebalancing and scaling") {
  auto gi = ext_q(-4);
  OrientedIdeal R = OrientedIdeal::unit(gi);
  BalancedTriple id = identity_triple(gi);
  BalancedTriple same = rebalance_phi2(R, R, R, xq(gi, 1, 0));
  for (int i = 0; i < 3; ++i) CHECK(equal_modules(same[i], id[i]));

  ExtElement one = xq(gi, 1, 0), i = ExtElement::omega(gi);
  BalancedTriple Bp = scale_triple(id, i, one, one);
  CHECK(Bp[0].alpha() == i);
  CHECK(Bp[0].beta() == xq(gi, -1, 0));
  CHECK(phi_prime(Bp) == Cube::from_longs(QQ(), {1, 0, 0, -1, 0, -1, -1, 0}));
  CHECK(triples_equivalent(id, Bp));

  auto e20 = ext_q(-20);
  BalancedTriple TP = triple_from_pair(P20(e20), P20(e20));
  ExtElement k = gen(e20, 1, 1);
  BalancedTriple S = scale_triple(TP, k, ExtElement(e20, q(1), q(0)) / k, xq(e20, 1, 0));
  CHECK(triples_equivalent(S, TP));
  CHECK_THROWS_AS(scale_triple(TP, gen(e20, 2, 0), xq(e20, 1, 0), xq(e20, 1, 0)), ScaleNotAllowed);

  CHECK_THROWS_AS(rebalance_phi2(R, R, R, xq(gi, 2, 0)), WitnessMismatch);
}

TEST_CASE("rebalancing the ideals of a reduced cube") {
  long d = -1, f = 2, g = 3, h = 1;
  auto e = ext_q(h * h + 4 * d * f * g);
  Cube A = Cube::from_longs(QQ(), {1, 0, 0, d, 0, f, g, h});
  ReducedCubeIdeals J = reduced_cube_ideals(A, e);
  BalancedTriple T = rebalance_phi2(J.j1, J.j2, J.j3, J.omega);
  CHECK(is_unit_ideal(mul_ideals(mul_ideals(T[0], T[1]), T[2])));
  // Another generator of the same oriented ideal gives an equivalent triple.
  BalancedTriple T2 = rebalance_phi2(J.j1, J.j2, J.j3, -J.omega);
  CHECK(triples_equivalent(T, T2));
}

TEST_CASE("triple equivalence needs the rational tier") {
  auto e = Extension::make(r2(-3, 0));
  CHECK_THROWS_AS(triples_equivalent(identity_triple(e), identity_triple(e)), UnsupportedBaseField);
}

TEST_CASE("property: balanced triples on both tiers") {
  for (const FieldDescriptor* fld : {&QQ(), &R2()}) {
    for (int trial = 0; trial < 60; ++trial) {
      Sampler s(*fld, 12, static_cast<std::uint64_t>(trial));
      ReducedCubeSample r = random_fundamental_reduced_cube(s, 2, false);
      OrientedIdeal J1 = s.ideal(r.ext, 2), J2 = s.ideal(r.ext, 2);
      BalancedTriple T = triple_from_pair(J1, J2);
      CHECK(is_unit(T.witness_u()));
      CHECK(is_totally_positive(T.witness_u()));
      if (fld == &QQ()) CHECK(T.witness_u() == q(1));
      CHECK(is_unit_ideal(mul_ideals(mul_ideals(T[0], T[1]), T[2])));
      CHECK_NOTHROW(make_balanced(T[0], T[1], T[2]));
      ExtElement k = s.ext_element(r.ext, 2, true);
      if (k.is_zero()) continue;
      ExtElement one = ExtElement::scalar(r.ext, BaseRational(BaseElement(*fld, 1)));
      BalancedTriple S = scale_triple(T, k, one / k, one);
      CHECK(is_unit_ideal(mul_ideals(mul_ideals(S[0], S[1]), S[2])));
      if (fld == &QQ()) CHECK(triples_equivalent(S, T));
    }
  }
}

#include "cubelaw/errors.hpp"
#include "cubelaw/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cubelaw;
using namespace testing_support;

TEST_CASE("extension descriptors") {
  auto gi = ext_q(-4);
  CHECK(gi->w() == q(0));
  CHECK(gi->z() == q(1));
  auto e3 = ext_q(-3);
  CHECK(e3->w() == q(1));
  CHECK(e3->z() == q(1));
  auto e5 = ext_q(5);
  CHECK(e5->w() == q(1));
  CHECK(e5->z() == q(-1));
  CHECK_THROWS_AS(ext_q(-12), NotFundamental);
  CHECK_THROWS_AS(ext_q(9), NotFundamental);
  CHECK_THROWS_AS(ext_q(0), ZeroInput);
}

TEST_CASE("fundamentality") {
  CHECK(is_fundamental(q(-4)));
  CHECK(is_fundamental(q(-3)));
  CHECK_FALSE(is_fundamental(q(-12)));
  CHECK(is_fundamental(q(40)));
  CHECK(is_fundamental(q(-20)));
  CHECK_FALSE(is_fundamental(q(-2)));
}

TEST_CASE("arithmetic in Q(i)") {
  auto e = ext_q(-4);
  ExtElement om = ExtElement::omega(e);
  ExtElement one = xq(e, 1, 0);
  CHECK(om * om == xq(e, -1, 0));
  CHECK(om * one == om);
  CHECK(xq(e, 1, 1) * xq(e, 1, -1) == xq(e, 2, 0));
  CHECK(conj(om) == -om);
  CHECK(tau(om) == BaseRational(QQ(), 1));
  CHECK(tau(xq(e, 5, 0)) == BaseRational(QQ(), 0));
  CHECK(tau(om * om * om) == BaseRational(QQ(), -1));
  CHECK(rel_norm(xq(e, 1, 1)) == BaseRational(QQ(), 2));
  CHECK(sqrt_d(e) == xq(e, 0, 2));
  CHECK(sqrt_d(e) * sqrt_d(e) == xq(e, -4, 0));
  CHECK_THROWS_AS(om / xq(e, 0, 0), DivisionByZero);
  CHECK_THROWS_AS(om + ExtElement::omega(ext_q(-3)), DescriptorMismatch);
}

TEST_CASE("conjugation and norms for other discriminants") {
  auto e3 = ext_q(-3);
  CHECK(conj(ExtElement::omega(e3)) == xq(e3, -1, -1));
  auto e20 = ext_q(-20);
  CHECK(rel_norm(ExtElement::omega(e20)) == BaseRational(QQ(), 5));
  CHECK(rel_norm(xq(e20, 1, 1)) == BaseRational(QQ(), 6));
}

TEST_CASE("property: extension identities on both tiers") {
  for (const FieldDescriptor* f : {&QQ(), &R2()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Sampler s(*f, 21, static_cast<std::uint64_t>(trial));
      ReducedCubeSample r = random_fundamental_reduced_cube(s, 3, false);
      auto e = r.ext;
      ExtElement sd = sqrt_d(e);
      CHECK(sd * sd == ExtElement::scalar(e, e->d()));
      CHECK(rel_norm(sd) == BaseRational(-e->d()));
      CHECK(tau(sd) == BaseRational(*f, 2));
      CHECK(rel_norm(ExtElement::omega(e)) == BaseRational(e->z()));
      for (int i = 0; i < 20; ++i) {
        ExtElement x = s.ext_element(e, 6);
        ExtElement y = s.ext_element(e, 6, true);
        CHECK(rel_norm(x * y) == rel_norm(x) * rel_norm(y));
        CHECK(tau(x + y) == tau(x) + tau(y));
        CHECK((x * conj(x)).in_base());
        CHECK(conj(conj(y)) == y);
        CHECK(x * y / y == x);
        CHECK(y * y.inverse() == ExtElement::scalar(e, BaseRational(*f, 1)));
      }
    }
  }
}

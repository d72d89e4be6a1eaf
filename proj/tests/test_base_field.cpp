#include "cubelaw/errors.hpp"
#include "cubelaw/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cubelaw;
using namespace testing_support;

TEST_CASE("ring arithmetic over both fields") {
  CHECK(r2(1, 1) * r2(1, -1) == r2(-1, 0));
  CHECK(q(3) + q(-3) == q(0));
  CHECK(r2(0, 1) * r2(0, 1) == r2(2, 0));
  CHECK_THROWS_AS(q(1) + r2(1, 0), DescriptorMismatch);
}

TEST_CASE("conjugation and norm") {
  CHECK(conj(r2(1, 1)) == r2(1, -1));
  CHECK(conj(q(7)) == q(7));
  CHECK(norm(r2(1, 1)) == -1);
  CHECK(norm(r2(3, 1)) == 7);
  CHECK(r2(3, 1) * conj(r2(3, 1)) == r2(7, 0));
  CHECK(norm(q(-6)) == -6);
  CHECK(norm(q(0)) == 0);
  CHECK(norm(r2(0, 0)) == 0);
}

TEST_CASE("exact sign vectors") {
  CHECK(sign_vector(q(-5)) == SignVector({-1}));
  CHECK(sign_vector(r2(1, 1)) == SignVector({1, -1}));
  CHECK(sign_vector(r2(3, 0)) == SignVector({1, 1}));
  // 99^2 - 2*70^2 = 1: the two embeddings straddle zero only barely.
  CHECK(sign_vector(r2(99, -70)) == SignVector({1, 1}));
  CHECK(sign_vector(r2(-99, 70)) == SignVector({-1, -1}));
  CHECK(sign_vector(r2(-7, 5)) == SignVector({1, -1}));
  CHECK_THROWS_AS(sign_vector(q(0)), ZeroInput);
}

TEST_CASE("units with prescribed signs") {
  CHECK(unit_with_signs(QQ(), SignVector({-1})) == q(-1));
  CHECK(unit_with_signs(R2(), SignVector({1, 1})) == r2(1, 0));
  CHECK(unit_with_signs(R2(), SignVector({-1, 1})) == r2(-1, -1));
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      BaseElement u = unit_with_signs(R2(), SignVector({a, b}));
      CHECK(sign_vector(u) == SignVector({a, b}));
      CHECK(abs_int(norm(u)) == 1);
    }
  }
}

TEST_CASE("Euclidean division") {
  DivMod d = divmod_euclid(q(7), q(3));
  CHECK(d.quot == q(2));
  CHECK(d.rem == q(1));
  DivMod e = divmod_euclid(r2(5, 1), r2(2, 0));
  CHECK(e.quot == r2(2, 0));
  CHECK(e.rem == r2(1, 1));
  CHECK(divmod_euclid(r2(4, -3), r2(4, -3)).quot == r2(1, 0));
  CHECK_THROWS_AS(divmod_euclid(q(1), q(0)), DivisionByZero);
}

TEST_CASE("gcd and canonical associates") {
  CHECK(gcd(q(12), q(18)) == q(6));
  CHECK(gcd(r2(0, 1), r2(2, 0)) == r2(2, 1));
  CHECK(gcd(q(-4), q(0)) == q(4));
  CHECK(gcd(r2(0, -3), r2(0, 0)) == canonical_associate(r2(0, 3)));
  CHECK_THROWS(gcd(q(0), q(0)));
  BaseElement c = canonical_associate(r2(0, 1));
  CHECK(is_totally_positive(c));
  CHECK(abs_int(norm(c)) == 2);
}

TEST_CASE("rank-2 Hermite normal form") {
  auto pair = [](long a, long b) { return Coords{q(a), q(b)}; };
  std::vector<Coords> g1{pair(1, 0), pair(0, 1), pair(3, 5)};
  Hnf2 h1 = hnf_rank2(g1);
  CHECK(h1.basis[0] == pair(1, 0));
  CHECK(h1.basis[1] == pair(0, 1));
  std::vector<Coords> g2{pair(4, 0), pair(2, 2), pair(-4, 2)};
  Hnf2 h2 = hnf_rank2(g2);
  CHECK(h2.basis[0] == pair(2, 0));
  CHECK(h2.basis[1] == pair(0, 2));
  std::vector<Coords> g3{pair(2, 0), pair(2, 0)};
  CHECK_THROWS_AS(hnf_rank2(g3), RankDeficient);
}

TEST_CASE("quadratic residues modulo 4") {
  CHECK(is_qr_mod4(q(-4)) == q(0));
  CHECK(is_qr_mod4(q(-3)) == q(1));
  CHECK_FALSE(is_qr_mod4(q(-2)).has_value());
}

TEST_CASE("factorisation") {
  auto f = factor_element(q(12));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == q(2));
  CHECK(f[1] == q(2));
  CHECK(f[2] == q(3));
  auto g = factor_element(r2(2, 0));
  REQUIRE(g.size() == 2);
  BaseElement prod = g[0] * g[1];
  CHECK(is_unit(divide_exact(prod, r2(2, 0))));
  CHECK(factor_element(r2(1, 1)).empty());
  CHECK_THROWS_AS(factor_element(q(2000000011), Int(1000)), NormBoundExceeded);
}

TEST_CASE("property: norms, signs and division over random elements") {
  for (const FieldDescriptor* f : {&QQ(), &R2()}) {
    Sampler s(*f, 11, 0);
    for (int i = 0; i < 400; ++i) {
      BaseElement x = s.nonzero_element(40);
      BaseElement y = s.nonzero_element(40);
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK(sign_vector(x * y) == sign_vector(x) * sign_vector(y));
      CHECK(conj(conj(x)) == x);
      DivMod d = divmod_euclid(x, y);
      CHECK(d.quot * y + d.rem == x);
      CHECK(abs_int(norm(d.rem)) < abs_int(norm(y)));
      ExtendedGcd e = xgcd(x, y);
      CHECK(e.s * x + e.t * y == e.g);
      CHECK(divides(e.g, x));
      CHECK(divides(e.g, y));
    }
  }
}

TEST_CASE("property: HNF is idempotent and invariant under extra generators") {
  for (const FieldDescriptor* f : {&QQ(), &R2()}) {
    Sampler s(*f, 12, 0);
    for (int i = 0; i < 200; ++i) {
      std::vector<Coords> gens;
      for (int k = 0; k < 3; ++k) gens.push_back({s.element(9), s.element(9)});
      BaseElement det = gens[0][0] * gens[1][1] - gens[0][1] * gens[1][0];
      if (det.is_zero()) continue;
      Hnf2 h = hnf_rank2(gens);
      std::vector<Coords> again(h.basis.begin(), h.basis.end());
      CHECK(hnf_rank2(again).basis == h.basis);
      std::vector<Coords> more = gens;
      BaseElement k1 = s.element(3), k2 = s.element(3);
      more.push_back({k1 * gens[0][0] + k2 * gens[2][0], k1 * gens[0][1] + k2 * gens[2][1]});
      std::reverse(more.begin(), more.end());
      CHECK(hnf_rank2(more).basis == h.basis);
    }
  }
}

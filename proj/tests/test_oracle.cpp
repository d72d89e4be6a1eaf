#include "cubelaw/errors.hpp"
#include "cubelaw/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cubelaw;
using namespace testing_support;

TEST_CASE("naive products") {
  auto e20 = ext_q(-20);
  OrientedIdeal P = OrientedIdeal::make(xq(e20, 2, 0), xq(e20, 1, 1), plus());
  OrientedIdeal PP = mul_ideals(P, P);
  CHECK(check_product(P, P, PP).agrees);
  NaiveBasis nb = naive_module_product(P, P);
  CHECK(naive_contains(nb.first, nb.second, xq(e20, 2, 0)));
  CHECK(naive_contains(nb.first, nb.second, xq(e20, 0, 2)));
  CHECK_FALSE(naive_contains(nb.first, nb.second, xq(e20, 1, 0)));

  OrientedIdeal R = OrientedIdeal::unit(e20);
  CHECK(check_product(R, R, mul_ideals(R, R)).agrees);
  CHECK_FALSE(check_product(P, P, R).agrees);
  CHECK_FALSE(check_product(R, R, with_eps(R, minus1())).agrees);
}

TEST_CASE("oracle agrees on random psi images") {
  const long discs[] = {-4, -20, -23, 40};
  for (int trial = 0; trial < 200; ++trial) {
    Sampler s(QQ(), 13, static_cast<std::uint64_t>(trial));
    auto e = ext_q(discs[trial % 4]);
    OrientedIdeal I = psi_map(s.form(e, 3), e), J = psi_map(s.form(e, 3), e);
    ProductAgreement a = check_product(I, J, mul_ideals(I, J));
    CHECK_MESSAGE(a.agrees, a.reason);
  }
}

TEST_CASE("cube law scans") {
  auto gi = ext_q(-4);
  CHECK(cube_law_holds(identity_cube(gi), gi));

  CubeLawReport red = scan_reduced_cubes(2);
  CHECK(red.ok());
  CubeLawReport red_serial = scan_reduced_cubes_serial(2);
  CHECK(red.checked == red_serial.checked);
  CHECK(red.passed == red_serial.passed);
  CHECK(red.sampled == red_serial.sampled);
  CHECK_THROWS_AS(scan_reduced_cubes(51), OutOfRange);

  RandomSpec spec;
  spec.seed = 5;
  spec.count = 500;
  spec.entry_bound = 3;
  CubeLawReport gen = scan_cube_law(spec);
  CHECK(gen.ok());
  CHECK(gen.checked == 500);
  CubeLawReport gen_serial = scan_cube_law_serial(spec);
  CHECK(gen_serial.passed == gen.passed);
  CHECK(report_json_line(gen) == report_json_line(gen_serial));
}

TEST_CASE("brute force equivalence") {
  CHECK(brute_force_equivalent(make_form(QQ(), 1, 0, 5), make_form(QQ(), 6, 2, 1), 3));
  CHECK_FALSE(brute_force_equivalent(make_form(QQ(), 1, 0, 5), make_form(QQ(), 2, 2, 3), 3));
}

TEST_CASE("class numbers through composition") {
  struct Case {
    long D, h;
  };
  for (Case c : {Case{-4, 1}, Case{-23, 3}, Case{40, 2}, Case{-20, 2}, Case{-3299, 27}}) {
    ClassNumberCheck r = class_number_crosscheck(Int(c.D));
    CHECK(r.h_forms == c.h);
    CHECK(r.h_composition == c.h);
  }
}

#include "cubelaw/balanced_triple.hpp"

#include "cubelaw/quadratic_form.hpp"

namespace cubelaw {

BalancedTriple make_balanced(const OrientedIdeal& I1, const OrientedIdeal& I2,
                             const OrientedIdeal& I3) {
  std::array<OrientedIdeal, 3> ideals{align_basis(I1), align_basis(I2), align_basis(I3)};
  OrientedIdeal prod = mul_ideals(mul_ideals(ideals[0], ideals[1]), ideals[2]);
  if (!is_unit_ideal(prod)) {
    throw ProductNotUnitIdeal("I1 I2 I3 = " + to_string(prod) + " is not O_L");
  }
  BaseRational d = det_m(ideals[0]) * det_m(ideals[1]) * det_m(ideals[2]);
  if (!d.is_integral() || !is_unit(d.num()) || !is_totally_positive(d.num())) {
    throw DetProductNotTotallyPositiveUnit("det M1 det M2 det M3 = " + to_string(d));
  }
  BaseElement u = d.num();
  return BalancedTriple(std::move(ideals), std::move(u));
}

BalancedTriple identity_triple(const ExtensionPtr& ext) {
  OrientedIdeal one = OrientedIdeal::unit(ext);
  return make_balanced(one, one, one);
}

BalancedTriple triple_from_pair(const OrientedIdeal& J1, const OrientedIdeal& J2) {
  return make_balanced(J1, J2, inverse_ideal(mul_ideals(J1, J2)));
}

BalancedTriple rebalance_phi2(const OrientedIdeal& J1, const OrientedIdeal& J2,
                              const OrientedIdeal& J3, const ExtElement& omega) {
  OrientedIdeal prod = mul_ideals(mul_ideals(J1, J2), J3);
  OrientedIdeal gen = principal_oriented(omega);
  if (!equal_modules(prod, gen) || !(prod.eps() == gen.eps())) {
    throw WitnessMismatch("J1 J2 J3 = " + to_string(prod) + " differs from (" + to_string(omega) +
                          ")");
  }
  return make_balanced(scale(J1, omega.inverse()), J2, J3);
}

BalancedTriple scale_triple(const BalancedTriple& T, const ExtElement& k1, const ExtElement& k2,
                            const ExtElement& k3) {
  if (k1.is_zero() || k2.is_zero() || k3.is_zero()) throw ScaleNotAllowed("zero scale factor");
  ExtElement k = k1 * k2 * k3;
  BaseRational n = rel_norm(k);
  if (!k.is_integral() || !n.is_integral() || !is_unit(n.num()) ||
      !is_totally_positive(n.num())) {
    throw ScaleNotAllowed("k1 k2 k3 = " + to_string(k) +
                          " is not a unit with totally positive norm");
  }
  return make_balanced(scale(T[0], k1), scale(T[1], k2), scale(T[2], k3));
}

bool triples_equivalent(const BalancedTriple& T1, const BalancedTriple& T2) {
  if (!T1.ext()->base().is_rational()) {
    throw UnsupportedBaseField("triple equivalence is decided over K = Q only");
  }
  for (int i = 0; i < 3; ++i) {
    if (!equivalent_forms(phi_map(T1[i]), phi_map(T2[i]))) return false;
  }
  return true;
}

std::string to_string(const BalancedTriple& T) {
  return "{" + to_string(T[0]) + ", " + to_string(T[1]) + ", " + to_string(T[2]) +
         "; u = " + to_string(T.witness_u()) + "}";
}

}  // namespace cubelaw

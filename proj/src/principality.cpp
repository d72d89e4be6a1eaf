#include "cubelaw/oriented_ideal.hpp"
#include "cubelaw/quadratic_form.hpp"

namespace cubelaw {

PrincipalDecision is_oriented_principal(const OrientedIdeal& I) {
  if (!I.base().is_rational()) {
    throw UnsupportedBaseField("principality is decided over K = Q only");
  }
  OrientedIdeal A = align_basis(I);
  QuadForm Q = phi_map(A);
  auto T = equivalence_transform(Q, identity_form(A.ext()));
  if (!T) return {false, std::nullopt};
  // Q(p x + q y, r x + s y) = N(x - Omega y) forces the rebased ideal
  // [p alpha - r beta, -q alpha + s beta] to be gamma * [1, Omega].
  ExtElement gamma = T->p * A.alpha() - T->r * A.beta();
  OrientedIdeal P = principal_oriented(gamma);
  if (!equal_modules(P, A) || !(P.eps() == A.eps())) {
    throw WitnessMismatch("extracted generator " + to_string(gamma) + " does not generate " +
                          to_string(I));
  }
  return {true, gamma};
}

}  // namespace cubelaw

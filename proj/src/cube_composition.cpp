#include "cubelaw/cube_composition.hpp"

namespace cubelaw {

Cube phi_prime(const BalancedTriple& T) {
  for (int i = 0; i < 3; ++i) {
    if (!is_aligned(T[i])) throw AlignmentViolated("triple component " + std::to_string(i + 1));
  }
  auto basis = [&](int ideal, int idx) -> const ExtElement& {
    return idx == 1 ? T[ideal].alpha() : T[ideal].beta();
  };
  std::array<BaseElement, 8> entries{
      BaseElement(T.ext()->base(), 0), BaseElement(T.ext()->base(), 0),
      BaseElement(T.ext()->base(), 0), BaseElement(T.ext()->base(), 0),
      BaseElement(T.ext()->base(), 0), BaseElement(T.ext()->base(), 0),
      BaseElement(T.ext()->base(), 0), BaseElement(T.ext()->base(), 0)};
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      ExtElement ab = basis(0, i) * basis(1, j);
      for (int k = 1; k <= 2; ++k) {
        BaseRational t = tau(ab * basis(2, k));
        if (!t.is_integral()) {
          throw NonIntegralEntry("tau(alpha_" + std::to_string(i) + " beta_" + std::to_string(j) +
                                 " gamma_" + std::to_string(k) + ") = " + to_string(t));
        }
        entries[static_cast<std::size_t>(Cube::index(i, j, k))] = t.num();
      }
    }
  }
  return Cube{std::move(entries)};
}

ReducedCubeIdeals reduced_cube_ideals(const Cube& R, const ExtensionPtr& ext) {
  if (!is_reduced_shape(R)) throw InvalidInput(to_string(R) + " is not reduced");
  AttachedForms q = attached_forms(R);
  ExtElement root = sqrt_disc(ext, disc_cube(R));
  BaseRational half(BaseElement(ext->base(), 1), 2);
  ExtElement omega = half * (root - ExtElement::scalar(ext, R[7]));
  return {psi_map(q.q1, ext), psi_map(q.q2, ext), psi_map(q.q3, ext), std::move(omega)};
}

BalancedTriple psi_prime(const Cube& A, const ExtensionPtr& ext) {
  if (!ext->disc_ratio_root(disc_cube(A))) {
    throw DiscOutsideOrbit("disc " + to_string(disc_cube(A)) + " is outside the orbit of " +
                           to_string(ext->d()));
  }
  CubeReduction red = reduce_cube(A);
  ReducedCubeIdeals r = reduced_cube_ideals(red.cube, ext);
  std::array<OrientedIdeal, 3> ideals{r.j1, r.j2, scale(r.j3, r.omega.inverse())};
  const auto& acts = red.transcript.actions;
  for (auto it = acts.rbegin(); it != acts.rend(); ++it) {
    auto& I = ideals[static_cast<std::size_t>(it->axis - 1)];
    I = with_basis(I, it->matrix.inverse());
  }
  const BaseElement& s = red.transcript.scalar;
  BaseElement s_inv = unit_inverse(s);
  ideals[0] = scale(ideals[0], ExtElement::scalar(ext, s_inv * s_inv * s_inv));
  return make_balanced(ideals[0], ideals[1], ideals[2]);
}

Cube compose_cubes(const Cube& A, const Cube& B, const ExtensionPtr& ext) {
  BalancedTriple ta = psi_prime(A, ext);
  BalancedTriple tb = psi_prime(B, ext);
  return phi_prime(rebalance_phi2(mul_ideals(ta[0], tb[0]), mul_ideals(ta[1], tb[1]),
                                  mul_ideals(ta[2], tb[2]), ExtElement::scalar(ext, BaseElement(ext->base(), 1))));
}

}  // namespace cubelaw

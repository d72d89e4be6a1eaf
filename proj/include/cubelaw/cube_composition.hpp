#pragma once

#include "cubelaw/balanced_triple.hpp"
#include "cubelaw/cube.hpp"

namespace cubelaw {

/// The cube (tau(alpha_i beta_j gamma_k)) of a balanced triple.
Cube phi_prime(const BalancedTriple& T);

/// Balanced triple of a projective cube A with disc(A) = u^2 D, normalised so
/// that phi_prime(psi_prime(A)) == -u * A. For reduced A = (1,0,0,d,0,f,g,h)
/// the components are ([-d, w], sgn -d), ([-g, w], sgn -g) and
/// (1/w)([-f, w], sgn -f) with w = (-h + sqrt disc)/2.
BalancedTriple psi_prime(const Cube& A, const ExtensionPtr& ext);

/// Ideals attached to a reduced cube: (Psi(Q1), Psi(Q2), Psi(Q3))
/// together with the generator w = (-h + sqrt disc)/2 of their product.
struct ReducedCubeIdeals {
  OrientedIdeal j1, j2, j3;
  ExtElement omega;
};
ReducedCubeIdeals reduced_cube_ideals(const Cube& R, const ExtensionPtr& ext);

/// phi_prime of the componentwise product of psi_prime(A) and psi_prime(B).
Cube compose_cubes(const Cube& A, const Cube& B, const ExtensionPtr& ext);

}  // namespace cubelaw

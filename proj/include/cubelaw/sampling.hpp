#pragma once

// Seeded generators for property tests and acceptance suites. Every stream is
// derived from (seed, index), so sample i is the same whether a suite runs
// serially or split across threads.

#include "cubelaw/balanced_triple.hpp"
#include "cubelaw/cube.hpp"

#include <cstdint>
#include <random>

namespace cubelaw {

struct RandomSpec {
  std::uint64_t seed = 0;
  long entry_bound = 3;
  long count = 100;
  const FieldDescriptor* field = &FieldDescriptor::rationals();
};

class Sampler {
 public:
  Sampler(const FieldDescriptor& field, std::uint64_t seed, std::uint64_t stream = 0);

  const FieldDescriptor& field() const { return *field_; }
  std::mt19937_64& rng() { return rng_; }

  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

  BaseElement element(long bound);
  BaseElement nonzero_element(long bound);
  /// +-eps^k with |k| <= max_exp.
  BaseElement unit(int max_exp = 2);
  /// g^k for the generator g of U+, |k| <= max_exp.
  BaseElement tp_unit(int max_exp = 1);
  SignVector signs();

  /// Product of elementary matrices, optionally with a U+ diagonal factor.
  Mat2 unimodular(int steps = 4, long bound = 2);
  /// Matrix with determinant a (not necessarily totally positive) unit.
  Mat2 gl2(int steps = 4, long bound = 2);
  /// Arbitrary matrix with nonzero determinant.
  Mat2 any_matrix(long bound);

  ExtElement ext_element(const ExtensionPtr& ext, long bound, bool allow_den = false);

  /// Primitive form of discriminant u^2 D scrambled by a unimodular transform.
  QuadForm form(const ExtensionPtr& ext, const BaseElement& u, long bound = 3);
  QuadForm form(const ExtensionPtr& ext, long bound = 3);
  /// psi_map of a random form, rescaled, rebased and reoriented.
  OrientedIdeal ideal(const ExtensionPtr& ext, long bound = 3);
  /// Balanced triple from a random pair of ideals.
  BalancedTriple triple(const ExtensionPtr& ext, long bound = 2);

  /// (1, 0, 0, d, 0, f, g, h) with disc(R) == u^2 D.
  Cube reduced_cube(const ExtensionPtr& ext, const BaseElement& u, long bound = 3);
  /// reduced_cube moved by a random element of Gamma.
  Cube cube(const ExtensionPtr& ext, const BaseElement& u, long bound = 3);

 private:
  const FieldDescriptor* field_;
  std::mt19937_64 rng_;
};

/// Random reduced cube (1,0,0,d,0,f,g,h), entries bounded, whose discriminant
/// is fundamental; returns the cube with the matching extension.
struct ReducedCubeSample {
  Cube cube;
  ExtensionPtr ext;
  BaseElement u;  // disc(cube) == u^2 * ext->d()
};
ReducedCubeSample random_fundamental_reduced_cube(Sampler& s, long bound, bool vary_unit);

}  // namespace cubelaw

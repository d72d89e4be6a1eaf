#pragma once

#include "cubelaw/quadratic_form.hpp"

#include <array>
#include <vector>

namespace cubelaw {

/// 2x2x2 cube over O_K. entries = (a,...,h) = (a111, a121, a112, a122, a211,
/// a221, a212, a222); axis 1 is the index i, axis 2 is j and axis 3 is k.
struct Cube {
  std::array<BaseElement, 8> entries;

  static Cube from_longs(const FieldDescriptor& f, const std::array<long, 8>& xs);
  static constexpr int index(int i, int j, int k) { return 4 * (i - 1) + (j - 1) + 2 * (k - 1); }

  const FieldDescriptor& field() const { return entries[0].field(); }
  const BaseElement& at(int i, int j, int k) const { return entries[index(i, j, k)]; }
  BaseElement& at(int i, int j, int k) { return entries[index(i, j, k)]; }
  const BaseElement& operator[](int n) const { return entries[static_cast<std::size_t>(n)]; }

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Matrix acting on one axis: slices (X1, X2) become (p X1 + q X2, r X1 + s X2).
struct AxisAction {
  int axis;  // 1, 2 or 3
  Mat2 matrix;
};

struct GammaElement {
  Mat2 t1, t2, t3;
  BaseElement u;

  static GammaElement identity(const FieldDescriptor& f);
};

struct CubeTranscript {
  std::vector<AxisAction> actions;
  BaseElement scalar;

  /// Applies the actions in order, then multiplies by the scalar.
  Cube replay(const Cube& A) const;
};

struct CubeReduction {
  Cube cube;
  CubeTranscript transcript;
};

struct AttachedForms {
  QuadForm q1, q2, q3;
  const QuadForm& operator[](int axis) const { return axis == 1 ? q1 : axis == 2 ? q2 : q3; }
};

/// Q_i = -det(R_i x - S_i y); Q_1 is cross-checked against its expanded formula.
AttachedForms attached_forms(const Cube& A);
BaseElement disc_cube(const Cube& A);
bool is_projective(const Cube& A);
bool is_reduced_shape(const Cube& A);

/// Single-axis action without any condition on the matrix.
Cube act_axis(const Cube& A, int axis, const Mat2& T);
Cube scale_cube(const Cube& A, const BaseElement& u);
/// u (id x id x T3)(id x T2 x id)(T1 x id x id) A, with every det T_i in U+ and u a unit.
Cube act_cube(const Cube& A, const GammaElement& g);
/// Same composition with no unit conditions (discriminant-law checks).
Cube act_raw(const Cube& A, const GammaElement& g);

/// (1, 0, 0, d, 0, f, g, h) equivalent to a projective A, with a replayable transcript.
CubeReduction reduce_cube(const Cube& A);

Cube identity_cube(const ExtensionPtr& ext);
Cube inverse_cube(const Cube& A);

std::string to_string(const Cube& A);

}  // namespace cubelaw

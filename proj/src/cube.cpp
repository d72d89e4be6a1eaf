#include "cubelaw/cube.hpp"

#include <stdexcept>

namespace cubelaw {

Cube Cube::from_longs(const FieldDescriptor& f, const std::array<long, 8>& xs) {
  return {{BaseElement(f, xs[0]), BaseElement(f, xs[1]), BaseElement(f, xs[2]),
           BaseElement(f, xs[3]), BaseElement(f, xs[4]), BaseElement(f, xs[5]),
           BaseElement(f, xs[6]), BaseElement(f, xs[7])}};
}

GammaElement GammaElement::identity(const FieldDescriptor& f) {
  return {Mat2::identity(f), Mat2::identity(f), Mat2::identity(f), BaseElement(f, 1)};
}

Cube CubeTranscript::replay(const Cube& A) const {
  Cube out = A;
  for (const auto& act : actions) out = act_axis(out, act.axis, act.matrix);
  return scale_cube(out, scalar);
}

namespace {

struct Slices {
  // Each matrix is stored row-major as (m11, m12, m21, m22).
  std::array<const BaseElement*, 4> r, s;
};

Slices slices(const Cube& A, int axis) {
  const auto& e = A.entries;
  switch (axis) {
    case 1:
      return {{&e[0], &e[1], &e[2], &e[3]}, {&e[4], &e[5], &e[6], &e[7]}};
    case 2:
      return {{&e[0], &e[4], &e[2], &e[6]}, {&e[1], &e[5], &e[3], &e[7]}};
    case 3:
      return {{&e[0], &e[4], &e[1], &e[5]}, {&e[2], &e[6], &e[3], &e[7]}};
    default:
      throw InvalidInput("axis must be 1, 2 or 3");
  }
}

QuadForm neg_det_pencil(const Slices& sl) {
  const auto& [r11, r12, r21, r22] = sl.r;
  const auto& [s11, s12, s21, s22] = sl.s;
  return {*r12 * *r21 - *r11 * *r22,
          *r11 * *s22 + *s11 * *r22 - *r12 * *s21 - *s12 * *r21,
          *s12 * *s21 - *s11 * *s22};
}

}  // namespace

AttachedForms attached_forms(const Cube& A) {
  AttachedForms out{neg_det_pencil(slices(A, 1)), neg_det_pencil(slices(A, 2)),
                    neg_det_pencil(slices(A, 3))};
  const auto& [a, b, c, d, e, f, g, h] = A.entries;
  QuadForm expanded{b * c - a * d, a * h - b * g - c * f + d * e, f * g - e * h};
  if (!(expanded == out.q1)) throw std::logic_error("attached form expansion mismatch");
  return out;
}

BaseElement disc_cube(const Cube& A) {
  const auto& [a, b, c, d, e, f, g, h] = A.entries;
  const auto& F = A.field();
  BaseElement two(F, 2), four(F, 4);
  return a * a * h * h + b * b * g * g + c * c * f * f + d * d * e * e -
         two * (a * b * g * h + c * d * e * f + a * c * f * h + b * d * e * g + a * e * d * h +
                b * f * c * g) +
         four * (a * d * f * g + b * c * e * h);
}

bool is_projective(const Cube& A) {
  AttachedForms q = attached_forms(A);
  return is_primitive(q.q1) && is_primitive(q.q2) && is_primitive(q.q3);
}

bool is_reduced_shape(const Cube& A) {
  return A[0].is_one() && A[1].is_zero() && A[2].is_zero() && A[4].is_zero();
}

Cube act_axis(const Cube& A, int axis, const Mat2& T) {
  if (axis < 1 || axis > 3) throw InvalidInput("axis must be 1, 2 or 3");
  Cube out = A;
  for (int x = 1; x <= 2; ++x) {
    for (int y = 1; y <= 2; ++y) {
      int i1, i2;
      if (axis == 1) {
        i1 = Cube::index(1, x, y);
        i2 = Cube::index(2, x, y);
      } else if (axis == 2) {
        i1 = Cube::index(x, 1, y);
        i2 = Cube::index(x, 2, y);
      } else {
        i1 = Cube::index(x, y, 1);
        i2 = Cube::index(x, y, 2);
      }
      const BaseElement& v1 = A.entries[static_cast<std::size_t>(i1)];
      const BaseElement& v2 = A.entries[static_cast<std::size_t>(i2)];
      out.entries[static_cast<std::size_t>(i1)] = T.p * v1 + T.q * v2;
      out.entries[static_cast<std::size_t>(i2)] = T.r * v1 + T.s * v2;
    }
  }
  return out;
}

Cube scale_cube(const Cube& A, const BaseElement& u) {
  Cube out = A;
  for (auto& x : out.entries) x *= u;
  return out;
}

Cube act_raw(const Cube& A, const GammaElement& g) {
  return scale_cube(act_axis(act_axis(act_axis(A, 1, g.t1), 2, g.t2), 3, g.t3), g.u);
}

Cube act_cube(const Cube& A, const GammaElement& g) {
  for (const Mat2* t : {&g.t1, &g.t2, &g.t3}) {
    BaseElement d = t->det();
    if (!is_unit(d) || !is_totally_positive(d)) {
      throw DeterminantNotInUnitGroup("det " + to_string(d) + " is not a totally positive unit");
    }
  }
  if (!is_unit(g.u)) throw DeterminantNotInUnitGroup("cube scalar must be a unit");
  return act_raw(A, g);
}

// ---------------------------------------------------------------- reduction

namespace {

class Reducer {
 public:
  explicit Reducer(const Cube& A) : cube_(A), f_(A.field()) {}

  CubeReduction run() {
    const BaseElement& a = cube_[0];
    for (long guard = 0; !(is_unit(a) && !a.is_zero()); ++guard) {
      if (guard > 10000) throw NotProjective("cube reduction did not terminate");
      // A step along one axis can spoil divisibility along another, so repeat
      // until the corner divides all three neighbours.
      while (gcd_step(1, 4) | gcd_step(2, 1) | gcd_step(3, 2)) {
      }
      if (cube_[0].is_zero()) {
        pull_far_entry();
        continue;
      }
      if (is_unit(cube_[0])) break;
      clear_neighbours();
      pull_far_entry();
    }
    clear_neighbours();
    BaseElement s = unit_inverse(cube_[0]);
    Cube out = scale_cube(cube_, s);
    return {out, {std::move(actions_), s}};
  }

 private:
  void apply(int axis, Mat2 m) {
    cube_ = act_axis(cube_, axis, m);
    actions_.push_back({axis, std::move(m)});
  }

  BaseElement el(long v) const { return BaseElement(f_, v); }

  // Replaces a by gcd(a, x) where x is the neighbour of a along the axis.
  bool gcd_step(int axis, int idx) {
    const BaseElement a = cube_[0];
    const BaseElement x = cube_[idx];
    if (x.is_zero() || (!a.is_zero() && divides(a, x))) return false;
    ExtendedGcd eg = xgcd(a, x);
    apply(axis, Mat2{eg.s, eg.t, -divide_exact(x, eg.g), divide_exact(a, eg.g)});
    return true;
  }

  void clear_neighbours() {
    for (auto [axis, idx] : {std::pair{1, 4}, std::pair{2, 1}, std::pair{3, 2}}) {
      const BaseElement& x = cube_[idx];
      if (x.is_zero()) continue;
      BaseElement k = divide_exact(x, cube_[0]);
      apply(axis, Mat2{el(1), el(0), -k, el(1)});
    }
  }

  // With b = c = e = 0, moves an entry not divisible by a next to the corner.
  void pull_far_entry() {
    const BaseElement a = cube_[0];
    auto bad = [&](int idx) { return !divides(a, cube_[idx]); };
    Mat2 shear{el(1), el(1), el(0), el(1)};
    if (bad(3)) {
      apply(2, shear);
    } else if (bad(5) || bad(6) || bad(7)) {
      apply(1, shear);
    } else {
      throw NotProjective("corner divides every entry");
    }
  }

  Cube cube_;
  const FieldDescriptor& f_;
  std::vector<AxisAction> actions_;
};

}  // namespace

CubeReduction reduce_cube(const Cube& A) {
  if (!is_projective(A)) throw NotProjective(to_string(A) + " is not projective");
  const auto& f = A.field();
  if (is_reduced_shape(A)) return {A, {{}, BaseElement(f, 1)}};
  CubeReduction r = Reducer(A).run();
  if (!is_reduced_shape(r.cube) || !(r.transcript.replay(A) == r.cube)) {
    throw std::logic_error("cube reduction certificate failed");
  }
  return r;
}

Cube identity_cube(const ExtensionPtr& ext) {
  const auto& f = ext->base();
  const BaseElement& w = ext->w();
  BaseElement zero(f, 0), one(f, 1);
  return {{zero, one, one, -w, one, -w, -w, w * w - ext->z()}};
}

Cube inverse_cube(const Cube& A) {
  const auto& e = A.entries;
  return {{-e[0], e[1], e[2], -e[3], e[4], -e[5], -e[6], e[7]}};
}

std::string to_string(const Cube& A) {
  std::string s = "[";
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) s += ", ";
    s += to_string(A.entries[i]);
  }
  return s + "]";
}

}  // namespace cubelaw

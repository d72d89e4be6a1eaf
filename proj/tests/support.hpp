#pragma once

#include "cubelaw/base_field.hpp"
#include "cubelaw/quadratic_extension.hpp"

namespace testing_support {

inline const cubelaw::FieldDescriptor& QQ() { return cubelaw::FieldDescriptor::rationals(); }
inline const cubelaw::FieldDescriptor& R2() { return cubelaw::FieldDescriptor::sqrt2(); }

inline cubelaw::BaseElement q(long u) { return cubelaw::BaseElement(QQ(), u); }
inline cubelaw::BaseElement r2(long u, long v) { return cubelaw::BaseElement(R2(), cubelaw::Int(u), cubelaw::Int(v)); }

inline cubelaw::ExtensionPtr ext_q(long D) { return cubelaw::Extension::make(q(D)); }

/// x + y*Omega with integer coordinates over Q.
inline cubelaw::ExtElement xq(const cubelaw::ExtensionPtr& e, long x, long y, long den = 1) {
  return cubelaw::ExtElement(e, q(x), q(y), cubelaw::Int(den));
}

inline cubelaw::SignVector plus(int r = 1) { return cubelaw::SignVector::all_positive(r); }
inline cubelaw::SignVector minus1() { return cubelaw::SignVector({-1}); }

}  // namespace testing_support

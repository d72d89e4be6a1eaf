#pragma once

// JSON encodings for every public value type. Integers are written as decimal
// strings; readers also accept JSON numbers.

#include "cubelaw/balanced_triple.hpp"
#include "cubelaw/cube.hpp"
#include "cubelaw/quadratic_form.hpp"

#include <json.hpp>

namespace cubelaw::json {

using nlohmann::json;

json encode(const Int& x);
json encode(const BaseElement& x);
json encode(const BaseRational& x);
json encode(const SignVector& s);
json encode(const ExtElement& x);
json encode(const OrientedIdeal& I);
json encode(const BalancedTriple& T);
json encode(const QuadForm& Q);
json encode(const Cube& A);
json encode(const Mat2& m);
json encode(const CubeTranscript& t);
json encode(const GammaElement& g);
json encode(const ClassGroupTable& t);

/// Decimal string, JSON integer, or {"u": .., "v": ..}.
Int decode_int(const json& j);
BaseElement decode_element(const FieldDescriptor& f, const json& j);
/// {"num_u", "num_v", "den"}, "p/q", or any BaseElement encoding.
BaseRational decode_rational(const FieldDescriptor& f, const json& j);
SignVector decode_signs(const FieldDescriptor& f, const json& j);
ExtElement decode_ext(const ExtensionPtr& ext, const json& j);
OrientedIdeal decode_ideal(const ExtensionPtr& ext, const json& j);
/// {"ideals": [...]} (witness_u, if present, is recomputed and compared).
BalancedTriple decode_triple(const ExtensionPtr& ext, const json& j);
QuadForm decode_form(const FieldDescriptor& f, const json& j);
/// {"entries": [8]} or a bare array of eight entries.
Cube decode_cube(const FieldDescriptor& f, const json& j);
Mat2 decode_matrix(const FieldDescriptor& f, const json& j);
GammaElement decode_gamma(const FieldDescriptor& f, const json& j);

}  // namespace cubelaw::json

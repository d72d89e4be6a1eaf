#include "cubelaw/json_io.hpp"

#include "cubelaw/errors.hpp"

namespace cubelaw::json {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\" in " + j.dump());
  }
  return j.at(key);
}

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw InvalidInput(std::string(what) + " needs an array of " + std::to_string(n) +
                       " entries, got " + j.dump());
  }
  return j;
}

}  // namespace

json encode(const Int& x) { return to_decimal(x); }

json encode(const BaseElement& x) { return {{"u", encode(x.u())}, {"v", encode(x.v())}}; }

json encode(const BaseRational& x) {
  return {{"num_u", encode(x.num().u())}, {"num_v", encode(x.num().v())}, {"den", encode(x.den())}};
}

json encode(const SignVector& s) { return s.values(); }

json encode(const ExtElement& x) { return {{"x", encode(x.x())}, {"y", encode(x.y())}}; }

json encode(const OrientedIdeal& I) {
  return {{"alpha", encode(I.alpha())}, {"beta", encode(I.beta())}, {"eps", encode(I.eps())}};
}

json encode(const BalancedTriple& T) {
  json ideals = json::array();
  for (const auto& I : T.ideals()) ideals.push_back(encode(I));
  return {{"ideals", ideals}, {"witness_u", encode(T.witness_u())}};
}

json encode(const QuadForm& Q) {
  return {{"a", encode(Q.a)}, {"b", encode(Q.b)}, {"c", encode(Q.c)}};
}

json encode(const Cube& A) {
  json e = json::array();
  for (const auto& x : A.entries) e.push_back(encode(x));
  return {{"entries", e}};
}

json encode(const Mat2& m) {
  return json::array({json::array({encode(m.p), encode(m.q)}), json::array({encode(m.r), encode(m.s)})});
}

json encode(const CubeTranscript& t) {
  json acts = json::array();
  for (const auto& a : t.actions) acts.push_back({{"axis", a.axis}, {"matrix", encode(a.matrix)}});
  return {{"actions", acts}, {"scalar", encode(t.scalar)}};
}

json encode(const GammaElement& g) {
  return {{"t1", encode(g.t1)}, {"t2", encode(g.t2)}, {"t3", encode(g.t3)}, {"u", encode(g.u)}};
}

json encode(const ClassGroupTable& t) {
  json reps = json::array();
  for (const auto& r : t.reps) reps.push_back(encode(r));
  return {{"disc", encode(t.disc)},
          {"order", t.reps.size()},
          {"oriented_order", t.oriented_order},
          {"identity", t.identity},
          {"reps", reps},
          {"table", t.table}};
}

Int decode_int(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

BaseElement decode_element(const FieldDescriptor& f, const json& j) {
  if (j.is_object()) {
    Int u = j.contains("u") ? decode_int(j.at("u")) : Int(0);
    Int v = j.contains("v") ? decode_int(j.at("v")) : Int(0);
    if (f.is_rational() && v != 0) {
      throw DescriptorMismatch("element " + j.dump() + " has a theta part over Q");
    }
    return BaseElement(f, u, v);
  }
  return BaseElement(f, decode_int(j));
}

BaseRational decode_rational(const FieldDescriptor& f, const json& j) {
  if (j.is_object() && j.contains("den")) {
    Int u = j.contains("num_u") ? decode_int(j.at("num_u")) : Int(0);
    Int v = j.contains("num_v") ? decode_int(j.at("num_v")) : Int(0);
    Int den = decode_int(j.at("den"));
    if (den == 0) throw DivisionByZero("rational " + j.dump() + " has zero denominator");
    if (f.is_rational() && v != 0) {
      throw DescriptorMismatch("rational " + j.dump() + " has a theta part over Q");
    }
    return BaseRational(BaseElement(f, u, v), den);
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int den = parse_int(s.substr(slash + 1));
      if (den == 0) throw DivisionByZero("rational " + s + " has zero denominator");
      return BaseRational(BaseElement(f, parse_int(s.substr(0, slash))), den);
    }
  }
  return BaseRational(decode_element(f, j));
}

SignVector decode_signs(const FieldDescriptor& f, const json& j) {
  auto n = static_cast<std::size_t>(f.real_embeddings());
  array_of(j, n, "eps");
  std::vector<int> s;
  for (const auto& x : j) {
    long v = static_cast<long>(decode_int(x).get_si());
    if (v != 1 && v != -1) throw InvalidInput("eps entries must be +1 or -1, got " + j.dump());
    s.push_back(static_cast<int>(v));
  }
  return SignVector(std::move(s));
}

ExtElement decode_ext(const ExtensionPtr& ext, const json& j) {
  const auto& f = ext->base();
  if (!j.is_object()) return ExtElement::scalar(ext, decode_rational(f, j));
  BaseRational x = j.contains("x") ? decode_rational(f, j.at("x")) : BaseRational(f, 0);
  BaseRational y = j.contains("y") ? decode_rational(f, j.at("y")) : BaseRational(f, 0);
  return ExtElement(ext, x, y);
}

OrientedIdeal decode_ideal(const ExtensionPtr& ext, const json& j) {
  SignVector eps = j.is_object() && j.contains("eps")
                       ? decode_signs(ext->base(), j.at("eps"))
                       : SignVector::all_positive(ext->base().real_embeddings());
  return OrientedIdeal::make(decode_ext(ext, field_of(j, "alpha")),
                             decode_ext(ext, field_of(j, "beta")), std::move(eps));
}

BalancedTriple decode_triple(const ExtensionPtr& ext, const json& j) {
  const json& ideals = array_of(j.is_array() ? j : field_of(j, "ideals"), 3, "triple");
  BalancedTriple T = make_balanced(decode_ideal(ext, ideals[0]), decode_ideal(ext, ideals[1]),
                                   decode_ideal(ext, ideals[2]));
  if (j.is_object() && j.contains("witness_u")) {
    BaseElement u = decode_element(ext->base(), j.at("witness_u"));
    if (!(u == T.witness_u())) {
      throw WitnessMismatch("witness_u " + to_string(u) + " differs from det product " +
                            to_string(T.witness_u()));
    }
  }
  return T;
}

QuadForm decode_form(const FieldDescriptor& f, const json& j) {
  if (j.is_array()) {
    array_of(j, 3, "form");
    return {decode_element(f, j[0]), decode_element(f, j[1]), decode_element(f, j[2])};
  }
  return {decode_element(f, field_of(j, "a")), decode_element(f, field_of(j, "b")),
          decode_element(f, field_of(j, "c"))};
}

Cube decode_cube(const FieldDescriptor& f, const json& j) {
  const json& e = array_of(j.is_array() ? j : field_of(j, "entries"), 8, "cube");
  std::array<BaseElement, 8> entries{
      decode_element(f, e[0]), decode_element(f, e[1]), decode_element(f, e[2]),
      decode_element(f, e[3]), decode_element(f, e[4]), decode_element(f, e[5]),
      decode_element(f, e[6]), decode_element(f, e[7])};
  return Cube{std::move(entries)};
}

Mat2 decode_matrix(const FieldDescriptor& f, const json& j) {
  array_of(j, 2, "matrix");
  array_of(j[0], 2, "matrix row");
  array_of(j[1], 2, "matrix row");
  return {decode_element(f, j[0][0]), decode_element(f, j[0][1]), decode_element(f, j[1][0]),
          decode_element(f, j[1][1])};
}

GammaElement decode_gamma(const FieldDescriptor& f, const json& j) {
  auto mat = [&](const char* key) {
    return j.contains(key) ? decode_matrix(f, j.at(key)) : Mat2::identity(f);
  };
  if (!j.is_object()) throw InvalidInput("gamma element must be an object, got " + j.dump());
  BaseElement u = j.contains("u") ? decode_element(f, j.at("u")) : BaseElement(f, 1);
  return {mat("t1"), mat("t2"), mat("t3"), u};
}

}  // namespace cubelaw::json

#pragma once

#include "cubelaw/quadratic_extension.hpp"

#include <optional>
#include <utility>

namespace cubelaw {

/// An O_K-basis [alpha, beta] of a fractional O_L-ideal with an orientation.
/// The orientation is free; align_basis makes it agree with the signs of det M.
class OrientedIdeal {
 public:
  /// Validates independence and closure under multiplication by Omega.
  static OrientedIdeal make(ExtElement alpha, ExtElement beta, SignVector eps);
  /// ([1, Omega]; +...+).
  static OrientedIdeal unit(const ExtensionPtr& ext);

  const ExtElement& alpha() const { return alpha_; }
  const ExtElement& beta() const { return beta_; }
  const SignVector& eps() const { return eps_; }
  const ExtensionPtr& ext() const { return alpha_.ext(); }
  const FieldDescriptor& base() const { return alpha_.base(); }

 private:
  OrientedIdeal(ExtElement alpha, ExtElement beta, SignVector eps)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), eps_(std::move(eps)) {}

  ExtElement alpha_, beta_;
  SignVector eps_;
};

/// tau(conj(alpha) * beta).
BaseRational det_m(const OrientedIdeal& I);
bool is_aligned(const OrientedIdeal& I);
OrientedIdeal align_basis(const OrientedIdeal& I);
/// Basis (p alpha + q beta, r alpha + s beta); det_m scales by det(T).
OrientedIdeal with_basis(const OrientedIdeal& I, const Mat2& T);
OrientedIdeal with_eps(const OrientedIdeal& I, const SignVector& eps);
/// kappa * I, orientation multiplied by the signs of N(kappa).
OrientedIdeal scale(const OrientedIdeal& I, const ExtElement& kappa);
OrientedIdeal mul_ideals(const OrientedIdeal& I, const OrientedIdeal& J);
OrientedIdeal inverse_ideal(const OrientedIdeal& I);
BaseRational ideal_norm(const OrientedIdeal& I);
OrientedIdeal principal_oriented(const ExtElement& gamma);

/// Coordinates (s, t) over K with xi = s*alpha + t*beta.
std::pair<BaseRational, BaseRational> module_coordinates(const OrientedIdeal& I, const ExtElement& xi);
bool contains(const OrientedIdeal& I, const ExtElement& xi);

/// Intrinsic description of the underlying module: the least positive integer
/// L with L*I inside O_L and the canonical HNF basis of L*I in [1, Omega]
/// coordinates.
struct CanonicalModule {
  Int scale;
  std::array<Coords, 2> basis;
  friend bool operator==(const CanonicalModule&, const CanonicalModule&) = default;
};
CanonicalModule canonical_module(const OrientedIdeal& I);
bool equal_modules(const OrientedIdeal& I, const OrientedIdeal& J);
bool is_unit_ideal(const OrientedIdeal& I);

struct PrincipalDecision {
  bool principal = false;
  /// gamma with I == principal_oriented(gamma) (module and orientation).
  std::optional<ExtElement> witness;
};

/// Narrow principality over K = Q, decided through reduction of phi_map(I).
PrincipalDecision is_oriented_principal(const OrientedIdeal& I);

std::string to_string(const OrientedIdeal& I);

}  // namespace cubelaw

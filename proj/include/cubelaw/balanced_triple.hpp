#pragma once

#include "cubelaw/oriented_ideal.hpp"

#include <array>

namespace cubelaw {

/// Three aligned oriented ideals with I1 I2 I3 = O_L and totally positive
/// det M1 det M2 det M3 (stored as witness_u).
class BalancedTriple {
 public:
  const OrientedIdeal& operator[](int i) const { return ideals_.at(static_cast<std::size_t>(i)); }
  const std::array<OrientedIdeal, 3>& ideals() const { return ideals_; }
  const BaseElement& witness_u() const { return witness_u_; }
  const ExtensionPtr& ext() const { return ideals_[0].ext(); }

 private:
  BalancedTriple(std::array<OrientedIdeal, 3> ideals, BaseElement u)
      : ideals_(std::move(ideals)), witness_u_(std::move(u)) {}
  friend BalancedTriple make_balanced(const OrientedIdeal&, const OrientedIdeal&,
                                      const OrientedIdeal&);

  std::array<OrientedIdeal, 3> ideals_;
  BaseElement witness_u_;
};

/// Aligns each ideal, then checks the product and determinant conditions.
BalancedTriple make_balanced(const OrientedIdeal& I1, const OrientedIdeal& I2,
                             const OrientedIdeal& I3);
BalancedTriple identity_triple(const ExtensionPtr& ext);
BalancedTriple triple_from_pair(const OrientedIdeal& J1, const OrientedIdeal& J2);
/// ((1/omega) J1, J2, J3) when J1 J2 J3 == (omega) as oriented ideals.
BalancedTriple rebalance_phi2(const OrientedIdeal& J1, const OrientedIdeal& J2,
                              const OrientedIdeal& J3, const ExtElement& omega);
/// (k1 I1, k2 I2, k3 I3) for k1 k2 k3 a unit of O_L with totally positive norm.
BalancedTriple scale_triple(const BalancedTriple& T, const ExtElement& k1, const ExtElement& k2,
                            const ExtElement& k3);
/// Componentwise narrow class comparison (K = Q).
bool triples_equivalent(const BalancedTriple& T1, const BalancedTriple& T2);

std::string to_string(const BalancedTriple& T);

}  // namespace cubelaw

#include "cubelaw/oriented_ideal.hpp"

namespace cubelaw {

namespace {

BaseRational det_of(const ExtElement& alpha, const ExtElement& beta) {
  return tau(conj(alpha) * beta);
}

std::pair<BaseRational, BaseRational> solve_coords(const ExtElement& alpha, const ExtElement& beta,
                                                    const BaseRational& det, const ExtElement& xi) {
  BaseRational a1 = alpha.x(), a2 = alpha.y();
  BaseRational b1 = beta.x(), b2 = beta.y();
  BaseRational x = xi.x(), y = xi.y();
  return {(x * b2 - y * b1) / det, (a1 * y - a2 * x) / det};
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Coords scaled_coords(const ExtElement& xi, const Int& L) {
  Int k = L / xi.den();
  return {k * xi.x_num(), k * xi.y_num()};
}

}  // namespace

OrientedIdeal OrientedIdeal::make(ExtElement alpha, ExtElement beta, SignVector eps) {
  if (alpha.ext() != beta.ext() && !(alpha.ext()->d() == beta.ext()->d())) {
    throw DescriptorMismatch("basis elements from different extensions");
  }
  if (eps.size() != alpha.base().real_embeddings()) {
    throw DescriptorMismatch("orientation length does not match the base field");
  }
  BaseRational det = det_of(alpha, beta);
  if (det.is_zero()) {
    throw DegenerateBasis("[" + to_string(alpha) + ", " + to_string(beta) + "] is K-dependent");
  }
  ExtElement om = ExtElement::omega(alpha.ext());
  for (const ExtElement* g : {&alpha, &beta}) {
    auto [s, t] = solve_coords(alpha, beta, det, om * *g);
    if (!s.is_integral() || !t.is_integral()) {
      throw NotAnIdeal("Omega*" + to_string(*g) + " is outside the span of [" + to_string(alpha) +
                       ", " + to_string(beta) + "]");
    }
  }
  return OrientedIdeal(std::move(alpha), std::move(beta), std::move(eps));
}

OrientedIdeal OrientedIdeal::unit(const ExtensionPtr& ext) {
  const auto& f = ext->base();
  return OrientedIdeal(ExtElement(ext, BaseElement(f, 1), BaseElement(f, 0)), ExtElement::omega(ext),
                       SignVector::all_positive(f.real_embeddings()));
}

BaseRational det_m(const OrientedIdeal& I) { return det_of(I.alpha(), I.beta()); }

bool is_aligned(const OrientedIdeal& I) { return sign_vector(det_m(I)) == I.eps(); }

OrientedIdeal align_basis(const OrientedIdeal& I) {
  SignVector have = sign_vector(det_m(I));
  if (have == I.eps()) return I;
  BaseElement mu = unit_with_signs(I.base(), have * I.eps());
  return OrientedIdeal::make(I.alpha(), mu * I.beta(), I.eps());
}

OrientedIdeal with_basis(const OrientedIdeal& I, const Mat2& T) {
  if (!is_unit(T.det())) throw DeterminantNotInUnitGroup("basis change must be invertible over O_K");
  return OrientedIdeal::make(T.p * I.alpha() + T.q * I.beta(), T.r * I.alpha() + T.s * I.beta(),
                             I.eps());
}

OrientedIdeal with_eps(const OrientedIdeal& I, const SignVector& eps) {
  return OrientedIdeal::make(I.alpha(), I.beta(), eps);
}

OrientedIdeal scale(const OrientedIdeal& I, const ExtElement& kappa) {
  if (kappa.is_zero()) throw ZeroInput("scaling an ideal by zero");
  return OrientedIdeal::make(kappa * I.alpha(), kappa * I.beta(),
                             I.eps() * sign_vector(rel_norm(kappa)));
}

OrientedIdeal mul_ideals(const OrientedIdeal& I, const OrientedIdeal& J) {
  std::array<ExtElement, 4> prods{I.alpha() * J.alpha(), I.alpha() * J.beta(),
                                  I.beta() * J.alpha(), I.beta() * J.beta()};
  Int L = 1;
  for (const auto& p : prods) L = lcm(L, p.den());
  std::vector<Coords> gens;
  gens.reserve(4);
  for (const auto& p : prods) gens.push_back(scaled_coords(p, L));
  Hnf2 h = hnf_rank2(gens);
  const auto& ext = I.ext();
  ExtElement a(ext, h.basis[0][0], h.basis[0][1], L);
  ExtElement b(ext, h.basis[1][0], h.basis[1][1], L);
  return OrientedIdeal::make(std::move(a), std::move(b), I.eps() * J.eps());
}

OrientedIdeal inverse_ideal(const OrientedIdeal& I) {
  OrientedIdeal A = align_basis(I);
  ExtElement dinv = ExtElement::scalar(A.ext(), det_m(A).inverse());
  return OrientedIdeal::make(dinv * conj(A.alpha()), -(dinv * conj(A.beta())), A.eps());
}

BaseRational ideal_norm(const OrientedIdeal& I) { return canonical_associate(det_m(I)); }

OrientedIdeal principal_oriented(const ExtElement& gamma) {
  if (gamma.is_zero()) throw ZeroInput("principal ideal of zero");
  return OrientedIdeal::make(gamma, gamma * ExtElement::omega(gamma.ext()),
                             sign_vector(rel_norm(gamma)));
}

std::pair<BaseRational, BaseRational> module_coordinates(const OrientedIdeal& I,
                                                         const ExtElement& xi) {
  return solve_coords(I.alpha(), I.beta(), det_m(I), xi);
}

bool contains(const OrientedIdeal& I, const ExtElement& xi) {
  auto [s, t] = module_coordinates(I, xi);
  return s.is_integral() && t.is_integral();
}

CanonicalModule canonical_module(const OrientedIdeal& I) {
  Int L = lcm(I.alpha().den(), I.beta().den());
  std::array<Coords, 2> gens{scaled_coords(I.alpha(), L), scaled_coords(I.beta(), L)};
  Hnf2 h = hnf_rank2(gens);
  return {L, h.basis};
}

bool equal_modules(const OrientedIdeal& I, const OrientedIdeal& J) {
  return canonical_module(I) == canonical_module(J);
}

bool is_unit_ideal(const OrientedIdeal& I) {
  return equal_modules(I, OrientedIdeal::unit(I.ext()));
}

std::string to_string(const OrientedIdeal& I) {
  std::string s = "([" + to_string(I.alpha()) + ", " + to_string(I.beta()) + "]; (";
  for (int i = 0; i < I.eps().size(); ++i) {
    if (i) s += ",";
    s += I.eps()[i] > 0 ? "+" : "-";
  }
  return s + "))";
}

}  // namespace cubelaw

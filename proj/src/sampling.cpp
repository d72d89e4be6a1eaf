#include "cubelaw/sampling.hpp"

#include "cubelaw/quadratic_form.hpp"

namespace cubelaw {

namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t stream) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffU); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(stream), hi(stream)};
}

}  // namespace

Sampler::Sampler(const FieldDescriptor& field, std::uint64_t seed, std::uint64_t stream)
    : field_(&field) {
  auto seq = make_seq(seed, stream);
  rng_.seed(seq);
}

long Sampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

BaseElement Sampler::element(long bound) {
  long u = uniform(-bound, bound);
  long v = field_->is_rational() ? 0 : uniform(-bound, bound);
  return BaseElement(*field_, Int(u), Int(v));
}

BaseElement Sampler::nonzero_element(long bound) {
  for (;;) {
    BaseElement x = element(bound);
    if (!x.is_zero()) return x;
  }
}

BaseElement Sampler::unit(int max_exp) {
  BaseElement eps = BaseElement::fundamental_unit(*field_);
  BaseElement out = field_->is_rational() ? BaseElement(*field_, 1)
                                          : power(eps, uniform(-max_exp, max_exp));
  return coin() ? -out : out;
}

BaseElement Sampler::tp_unit(int max_exp) {
  if (field_->is_rational()) return BaseElement(*field_, 1);
  return power(totally_positive_unit_generator(*field_), uniform(-max_exp, max_exp));
}

SignVector Sampler::signs() {
  std::vector<int> s(static_cast<std::size_t>(field_->real_embeddings()));
  for (auto& x : s) x = coin() ? 1 : -1;
  return SignVector(std::move(s));
}

Mat2 Sampler::unimodular(int steps, long bound) {
  const auto& f = *field_;
  BaseElement one(f, 1), zero(f, 0);
  Mat2 m = Mat2::identity(f);
  for (int i = 0; i < steps; ++i) {
    BaseElement k = element(bound);
    m = m * (coin() ? Mat2{one, k, zero, one} : Mat2{one, zero, k, one});
  }
  if (!f.is_rational() && coin()) m = m * Mat2{tp_unit(1), zero, zero, one};
  return m;
}

Mat2 Sampler::gl2(int steps, long bound) {
  const auto& f = *field_;
  BaseElement zero(f, 0);
  return unimodular(steps, bound) * Mat2{unit(1), zero, zero, BaseElement(f, 1)};
}

Mat2 Sampler::any_matrix(long bound) {
  for (;;) {
    Mat2 m{element(bound), element(bound), element(bound), element(bound)};
    if (!m.det().is_zero()) return m;
  }
}

ExtElement Sampler::ext_element(const ExtensionPtr& ext, long bound, bool allow_den) {
  for (;;) {
    Int den = allow_den ? Int(uniform(1, 3)) : Int(1);
    ExtElement x(ext, element(bound), element(bound), den);
    if (!x.is_zero()) return x;
  }
}

QuadForm Sampler::form(const ExtensionPtr& ext, const BaseElement& u, long bound) {
  const auto& f = *field_;
  BaseElement disc = u * u * ext->d();
  BaseElement four(f, 4);
  for (;;) {
    BaseElement b = u * ext->w() + BaseElement(f, 2) * element(bound);
    BaseElement n = divide_exact(b * b - disc, four);
    if (n.is_zero()) continue;
    BaseElement a = unit(1);
    for (const auto& p : factor_element(n)) {
      if (coin()) a *= p;
    }
    QuadForm Q{a, b, divide_exact(n, a)};
    if (!is_primitive(Q)) continue;
    return act_form(Q, unimodular(3, 1));
  }
}

QuadForm Sampler::form(const ExtensionPtr& ext, long bound) {
  return form(ext, BaseElement(*field_, 1), bound);
}

OrientedIdeal Sampler::ideal(const ExtensionPtr& ext, long bound) {
  OrientedIdeal I = psi_map(form(ext, bound), ext);
  I = scale(I, ext_element(ext, 2, true));
  I = with_basis(I, gl2(2, 1));
  return with_eps(I, signs());
}

BalancedTriple Sampler::triple(const ExtensionPtr& ext, long bound) {
  return triple_from_pair(ideal(ext, bound), ideal(ext, bound));
}

Cube Sampler::reduced_cube(const ExtensionPtr& ext, const BaseElement& u, long bound) {
  const auto& f = *field_;
  BaseElement disc = u * u * ext->d();
  BaseElement four(f, 4), zero(f, 0), one(f, 1);
  for (;;) {
    BaseElement h = u * ext->w() + BaseElement(f, 2) * element(bound);
    BaseElement m = divide_exact(disc - h * h, four);
    if (m.is_zero()) continue;
    BaseElement d = unit(1), fe = unit(1);
    for (const auto& p : factor_element(m)) {
      long slot = uniform(0, 2);
      if (slot == 0) d *= p;
      if (slot == 1) fe *= p;
    }
    BaseElement g = divide_exact(m, d * fe);
    Cube R{{one, zero, zero, d, zero, fe, g, h}};
    if (is_projective(R)) return R;
  }
}

Cube Sampler::cube(const ExtensionPtr& ext, const BaseElement& u, long bound) {
  Cube R = reduced_cube(ext, u, bound);
  GammaElement g{unimodular(3, 1), unimodular(3, 1), unimodular(3, 1), unit(1)};
  return act_cube(R, g);
}

ReducedCubeSample random_fundamental_reduced_cube(Sampler& s, long bound, bool vary_unit) {
  const auto& f = s.field();
  BaseElement zero(f, 0), one(f, 1), four(f, 4);
  for (;;) {
    BaseElement d = s.nonzero_element(bound);
    BaseElement fe = s.nonzero_element(bound);
    BaseElement g = s.nonzero_element(bound);
    BaseElement h = s.element(bound);
    BaseElement disc = h * h + four * d * fe * g;
    if (disc.is_zero() || exact_sqrt(disc)) continue;
    if (!is_fundamental(disc)) continue;
    Cube R{{one, zero, zero, d, zero, fe, g, h}};
    if (!is_projective(R)) continue;
    BaseElement u = vary_unit ? s.tp_unit(1) : one;
    BaseElement u_inv = unit_inverse(u);
    return {R, Extension::make(disc * u_inv * u_inv), u};
  }
}

}  // namespace cubelaw

#include "cubelaw/oracle.hpp"

#include "cubelaw/quadratic_form.hpp"

#include <json.hpp>
#include <omp.h>

#include <optional>
#include <set>
#include <tuple>

namespace cubelaw {

NaiveBasis naive_module_product(const OrientedIdeal& I, const OrientedIdeal& J) {
  const auto& ext = I.ext();
  const auto& f = I.base();
  std::array<ExtElement, 4> prods{I.alpha() * J.alpha(), I.alpha() * J.beta(),
                                  I.beta() * J.alpha(), I.beta() * J.beta()};
  Int L = 1;
  for (const auto& p : prods) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p.den().get_mpz_t());
  std::vector<BaseElement> xs, ys;
  for (const auto& p : prods) {
    Int k = L / p.den();
    xs.push_back(k * p.x_num());
    ys.push_back(k * p.y_num());
  }

  // Bezout vector: a combination of the generators whose Omega-coordinate is
  // a gcd of all Omega-coordinates.
  BaseElement vx(f, 0), vy(f, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    if (ys[i].is_zero()) continue;
    if (vy.is_zero()) {
      vx = xs[i];
      vy = ys[i];
      continue;
    }
    ExtendedGcd eg = xgcd(vy, ys[i]);
    vx = eg.s * vx + eg.t * xs[i];
    vy = eg.g;
  }
  if (vy.is_zero()) throw RankDeficient("product has no Omega component");

  std::vector<BaseElement> minors;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      BaseElement m = xs[i] * ys[j] - xs[j] * ys[i];
      if (!m.is_zero()) minors.push_back(m);
    }
  }
  if (minors.empty()) throw RankDeficient("all 2x2 minors vanish");
  BaseElement a = divide_exact(gcd_all(minors), vy);
  return {ExtElement(ext, a, BaseElement(f, 0), L), ExtElement(ext, vx, vy, L)};
}

bool naive_contains(const ExtElement& b1, const ExtElement& b2, const ExtElement& xi) {
  BaseRational det = b1.x() * b2.y() - b1.y() * b2.x();
  if (det.is_zero()) throw DegenerateBasis("naive basis is K-dependent");
  BaseRational s = (xi.x() * b2.y() - xi.y() * b2.x()) / det;
  BaseRational t = (b1.x() * xi.y() - b1.y() * xi.x()) / det;
  return s.is_integral() && t.is_integral();
}

ProductAgreement check_product(const OrientedIdeal& I, const OrientedIdeal& J,
                               const OrientedIdeal& product) {
  NaiveBasis nb = naive_module_product(I, J);
  const ExtElement& m1 = product.alpha();
  const ExtElement& m2 = product.beta();
  if (!naive_contains(m1, m2, nb.first) || !naive_contains(m1, m2, nb.second)) {
    return {false, "naive product is not contained in the reported product"};
  }
  if (!naive_contains(nb.first, nb.second, m1) || !naive_contains(nb.first, nb.second, m2)) {
    return {false, "reported product is not contained in the naive product"};
  }
  if (!(product.eps() == I.eps() * J.eps())) {
    return {false, "orientation is not the componentwise product"};
  }
  return {true, ""};
}

bool brute_force_equivalent(const QuadForm& Q1, const QuadForm& Q2, long bound) {
  const auto& f = Q1.field();
  if (!f.is_rational()) throw UnsupportedBaseField("brute-force equivalence runs over Q only");
  for (long p = -bound; p <= bound; ++p) {
    for (long q = -bound; q <= bound; ++q) {
      for (long r = -bound; r <= bound; ++r) {
        for (long s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) continue;
          Mat2 T{BaseElement(f, p), BaseElement(f, q), BaseElement(f, r), BaseElement(f, s)};
          if (substitute_form(Q1, T) == Q2) return true;
        }
      }
    }
  }
  return false;
}

bool cube_law_holds(const Cube& A, const ExtensionPtr& ext, const ProductSink* sink) {
  AttachedForms q = attached_forms(A);
  OrientedIdeal j1 = psi_map(q.q1, ext);
  OrientedIdeal j2 = psi_map(q.q2, ext);
  OrientedIdeal j3 = psi_map(q.q3, ext);
  OrientedIdeal j12 = mul_ideals(j1, j2);
  OrientedIdeal j123 = mul_ideals(j12, j3);
  if (sink) {
    (*sink)(j1, j2, j12);
    (*sink)(j12, j3, j123);
  }
  return is_oriented_principal(j123).principal;
}

namespace {

struct Outcome {
  bool checked = false;
  bool passed = false;
  std::optional<Cube> cube;
};

Outcome general_sample(const RandomSpec& spec, long i) {
  Sampler s(*spec.field, spec.seed, static_cast<std::uint64_t>(i));
  ReducedCubeSample r = random_fundamental_reduced_cube(s, spec.entry_bound, false);
  GammaElement g{s.unimodular(3, 1), s.unimodular(3, 1), s.unimodular(3, 1), s.unit(1)};
  Cube A = act_cube(r.cube, g);
  Outcome out{true, false, A};
  try {
    out.passed = cube_law_holds(A, r.ext);
  } catch (const MathError&) {
    out.passed = false;
  }
  return out;
}

constexpr long kFieldBoundCap = 50;

Outcome reduced_sample(long bound, long i, const ProductSink* sink) {
  const auto& q = FieldDescriptor::rationals();
  long span = 2 * bound + 1;
  long d = i % span - bound;
  long f = (i / span) % span - bound;
  long g = (i / span / span) % span - bound;
  long h = (i / span / span / span) % span - bound;
  if (d == 0 || f == 0 || g == 0) return {};
  Int disc = Int(h * h) + 4 * Int(d) * Int(f) * Int(g);
  if (disc == 0 || is_perfect_square(disc)) return {};
  BaseElement D(q, disc);
  if (!is_fundamental(D)) return {};
  Cube R = Cube::from_longs(q, {1, 0, 0, d, 0, f, g, h});
  if (!is_projective(R)) return {};
  Outcome out{true, false, R};
  try {
    out.passed = cube_law_holds(R, Extension::make(D), sink);
  } catch (const MathError&) {
    out.passed = false;
  }
  return out;
}

CubeLawReport collect(std::vector<Outcome>& outcomes) {
  CubeLawReport rep;
  rep.sampled = static_cast<long>(outcomes.size());
  for (auto& o : outcomes) {
    if (!o.checked) continue;
    ++rep.checked;
    if (o.passed) {
      ++rep.passed;
    } else if (o.cube) {
      rep.counterexamples.push_back(*o.cube);
    }
  }
  return rep;
}

void require_rational(const RandomSpec& spec) {
  if (!spec.field->is_rational()) throw UnsupportedBaseField("cube-law scans run over Q");
  if (spec.entry_bound < 1 || spec.entry_bound > kFieldBoundCap) {
    throw OutOfRange("entry bound must lie in [1, 50]");
  }
}

long reduced_count(long bound) {
  if (bound < 1 || bound > kFieldBoundCap) throw OutOfRange("entry bound must lie in [1, 50]");
  long span = 2 * bound + 1;
  return span * span * span * span;
}

}  // namespace

CubeLawReport scan_cube_law_serial(const RandomSpec& spec) {
  require_rational(spec);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(spec.count));
  for (long i = 0; i < spec.count; ++i) outcomes[static_cast<std::size_t>(i)] = general_sample(spec, i);
  return collect(outcomes);
}

CubeLawReport scan_cube_law(const RandomSpec& spec) {
  require_rational(spec);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(spec.count));
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < spec.count; ++i) outcomes[static_cast<std::size_t>(i)] = general_sample(spec, i);
  return collect(outcomes);
}

CubeLawReport scan_reduced_cubes_serial(long bound, const ProductSink* sink) {
  long n = reduced_count(bound);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = reduced_sample(bound, i, sink);
  return collect(outcomes);
}

CubeLawReport scan_reduced_cubes(long bound, const ProductSink* sink) {
  long n = reduced_count(bound);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = reduced_sample(bound, i, sink);
  return collect(outcomes);
}

ClassNumberCheck class_number_crosscheck(const Int& D) {
  if (abs_int(D) > 10000) throw OutOfRange("class number cross-check needs |D| <= 10^4");
  const auto& q = FieldDescriptor::rationals();
  std::vector<QuadForm> reps;
  for (const auto& f : enumerate_reduced(D)) {
    if (D > 0 || f.a.u() > 0) reps.push_back(f);
  }
  auto ext = Extension::make(BaseElement(q, D));
  auto key = [](const QuadForm& f) { return std::make_tuple(f.a.u(), f.b.u(), f.c.u()); };
  std::set<std::tuple<Int, Int, Int>> seen;
  std::vector<QuadForm> frontier{reduce_form(identity_form(ext)).form};
  seen.insert(key(frontier.front()));
  while (!frontier.empty()) {
    std::vector<QuadForm> next;
    for (const auto& x : frontier) {
      for (const auto& r : reps) {
        QuadForm y = reduce_form(compose_forms(x, r, ext)).form;
        if (seen.insert(key(y)).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {static_cast<long>(reps.size()), static_cast<long>(seen.size())};
}

std::string report_json_line(const CubeLawReport& r) {
  nlohmann::json j;
  j["sampled"] = r.sampled;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  nlohmann::json cx = nlohmann::json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : c.entries) e.push_back(to_string(x));
    cx.push_back(e);
  }
  j["counterexamples"] = cx;
  return j.dump();
}

}  // namespace cubelaw

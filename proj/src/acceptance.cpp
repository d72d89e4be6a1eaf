#include "cubelaw/acceptance.hpp"

#include "cubelaw/cube_composition.hpp"
#include "cubelaw/json_io.hpp"
#include "cubelaw/oracle.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace cubelaw {

namespace {

constexpr std::uint64_t kStreamStride = 1'000'000;

struct Tally {
  long total = 0;
  long failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0 && total > 0; }
  std::string summary(const std::string& what) const {
    std::ostringstream os;
    os << (total - failed) << "/" << total << " " << what;
    if (failed) os << "; first failure: " << first_failure;
    return os.str();
  }
};

// Evaluates fn(i) for i in [0, n) across threads; fn returns "" on success.
Tally run_indexed(long n, const std::function<std::string(long)>& fn) {
  std::vector<std::string> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    std::string msg;
    try {
      msg = fn(i);
    } catch (const MathError& e) {
      msg = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    out[static_cast<std::size_t>(i)] = std::move(msg);
  }
  Tally t;
  t.total = n;
  for (long i = 0; i < n; ++i) {
    const auto& m = out[static_cast<std::size_t>(i)];
    if (m.empty()) continue;
    if (t.failed++ == 0) t.first_failure = "sample " + std::to_string(i) + ": " + m;
  }
  return t;
}

struct RecordedProduct {
  std::string suite;
  OrientedIdeal I, J, IJ;
};

class ProductRecorder {
 public:
  ProductSink sink(std::string suite) {
    return [this, suite](const OrientedIdeal& I, const OrientedIdeal& J, const OrientedIdeal& IJ) {
      std::lock_guard<std::mutex> lock(mu_);
      products_.push_back({suite, I, J, IJ});
    };
  }
  void add(const std::string& suite, const OrientedIdeal& I, const OrientedIdeal& J,
           const OrientedIdeal& IJ) {
    std::lock_guard<std::mutex> lock(mu_);
    products_.push_back({suite, I, J, IJ});
  }
  const std::vector<RecordedProduct>& products() const { return products_; }

 private:
  std::mutex mu_;
  std::vector<RecordedProduct> products_;
};

struct Tier {
  const FieldDescriptor* field;
  const char* name;
  long bound;
  bool vary_unit;
  int index;
};

std::vector<Tier> tiers() {
  return {{&FieldDescriptor::rationals(), "Q", 3, false, 0},
          {&FieldDescriptor::sqrt2(), "Q-sqrt2", 2, true, 1}};
}

Sampler sampler_for(const Tier& t, std::uint64_t seed, int criterion, long i) {
  std::uint64_t stream = static_cast<std::uint64_t>(criterion) * kStreamStride * 4 +
                         static_cast<std::uint64_t>(t.index) * kStreamStride +
                         static_cast<std::uint64_t>(i);
  return Sampler(*t.field, seed, stream);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "; ";
    s += p;
  }
  return s;
}

bool forms_match(const AttachedForms& x, const AttachedForms& y) {
  return equivalent_forms(x.q1, y.q1) && equivalent_forms(x.q2, y.q2) &&
         equivalent_forms(x.q3, y.q3);
}

// ---------------------------------------------------------------------------

CriterionResult worked_example() {
  const auto& Q = FieldDescriptor::rationals();
  auto ext = Extension::make(BaseElement(Q, -4));
  auto one = OrientedIdeal::unit(ext);
  ExtElement i = ExtElement::omega(ext);
  ExtElement minus_one = ExtElement::scalar(ext, BaseRational(Q, -1));
  auto rotated = OrientedIdeal::make(i, minus_one, SignVector::all_positive(1));

  Cube first = phi_prime(make_balanced(one, one, one));
  Cube second = phi_prime(make_balanced(rotated, one, one));
  Cube want_first = Cube::from_longs(Q, {0, 1, 1, 0, 1, 0, 0, -1});
  Cube want_second = Cube::from_longs(Q, {1, 0, 0, -1, 0, -1, -1, 0});
  Mat2 S{BaseElement(Q, 0), BaseElement(Q, 1), BaseElement(Q, -1), BaseElement(Q, 0)};
  Cube moved = act_axis(want_first, 2, S);

  std::vector<std::string> bad;
  if (!(first == want_first)) bad.push_back("first cube " + to_string(first));
  if (!(second == want_second)) bad.push_back("second cube " + to_string(second));
  if (!(moved == want_second)) bad.push_back("axis-2 action gives " + to_string(moved));
  CriterionResult r{1, "worked example cubes and axis action (exact)", bad.empty(), ""};
  r.detail = bad.empty() ? to_string(first) + " and " + to_string(second) + " reproduced" : join(bad);
  return r;
}

std::string exact_product_form(const Cube& R, const ExtensionPtr& ext, const BaseElement& u,
                               const ProductSink* sink) {
  AttachedForms q = attached_forms(R);
  OrientedIdeal j1 = psi_map(q.q1, ext);
  OrientedIdeal j2 = psi_map(q.q2, ext);
  OrientedIdeal j3 = psi_map(q.q3, ext);
  OrientedIdeal j12 = mul_ideals(j1, j2);
  OrientedIdeal prod = mul_ideals(j12, j3);
  if (sink) {
    (*sink)(j1, j2, j12);
    (*sink)(j12, j3, prod);
  }
  BaseRational half(BaseElement(ext->base(), 1), 2);
  ExtElement omega = half * (u * sqrt_d(ext) - ExtElement::scalar(ext, R[7]));
  if (!equal_modules(prod, principal_oriented(omega))) {
    return to_string(R) + ": product " + to_string(prod) + " is not [omega, omega*Omega]";
  }
  SignVector want = sign_vector(-(R[3] * R[5] * R[6]));
  if (!(prod.eps() == want)) return to_string(R) + ": product orientation differs from sgn(-dfg)";
  return "";
}

CriterionResult cube_law(std::uint64_t seed, ProductRecorder& rec) {
  const auto& Q = FieldDescriptor::rationals();
  ProductSink sink = rec.sink("cube-law");
  CubeLawReport scan = scan_reduced_cubes(3, &sink);

  // Exact product form over the same exhaustive family.
  std::vector<std::array<long, 4>> family;
  for (long d = -3; d <= 3; ++d)
    for (long f = -3; f <= 3; ++f)
      for (long g = -3; g <= 3; ++g)
        for (long h = -3; h <= 3; ++h) {
          if (d == 0 || f == 0 || g == 0) continue;
          Int disc = Int(h * h + 4 * d * f * g);
          if (disc == 0 || is_perfect_square(disc) || !is_fundamental(BaseElement(Q, disc))) continue;
          if (!is_projective(Cube::from_longs(Q, {1, 0, 0, d, 0, f, g, h}))) continue;
          family.push_back({d, f, g, h});
        }
  Tally q_exact = run_indexed(static_cast<long>(family.size()), [&](long i) {
    const auto& [d, f, g, h] = family[static_cast<std::size_t>(i)];
    Cube R = Cube::from_longs(Q, {1, 0, 0, d, 0, f, g, h});
    auto ext = Extension::make(disc_cube(R));
    return exact_product_form(R, ext, BaseElement(Q, 1), nullptr);
  });

  Tier t2 = tiers()[1];
  Tally s_exact = run_indexed(200, [&](long i) {
    Sampler s = sampler_for(t2, seed, 2, i);
    ReducedCubeSample r = random_fundamental_reduced_cube(s, t2.bound, t2.vary_unit);
    return exact_product_form(r.cube, r.ext, r.u, &sink);
  });

  CriterionResult r{2, "cube law on reduced cubes and exact product form", false, ""};
  r.pass = scan.ok() && scan.checked == static_cast<long>(family.size()) && q_exact.ok() &&
           s_exact.ok();
  std::ostringstream os;
  os << "Q exhaustive: " << scan.passed << "/" << scan.checked << " principal; "
     << q_exact.summary("exact [omega, omega*Omega] (Q)") << "; "
     << s_exact.summary("exact [omega, omega*Omega] (Q-sqrt2)");
  if (!scan.counterexamples.empty()) os << "; counterexample " << to_string(scan.counterexamples[0]);
  r.detail = os.str();
  return r;
}

CriterionResult round_trip(std::uint64_t seed) {
  std::vector<std::string> parts;
  bool pass = true;
  for (const Tier& t : tiers()) {
    Tally tally = run_indexed(500, [&](long i) -> std::string {
      Sampler s = sampler_for(t, seed, 3, i);
      ReducedCubeSample r = random_fundamental_reduced_cube(s, t.bound, t.vary_unit);
      Cube B = phi_prime(psi_prime(r.cube, r.ext));
      const Cube& R = r.cube;
      const auto& f = *t.field;
      BaseElement nu = -r.u;
      BaseElement zero(f, 0);
      struct Expect {
        const char* label;
        int i, j, k;
        BaseElement value;
      };
      std::vector<Expect> expect{
          {"b111 = -u", 1, 1, 1, nu},         {"b121 = 0", 1, 2, 1, zero},
          {"b112 = 0", 1, 1, 2, zero},        {"b122 = -ud", 1, 2, 2, nu * R[3]},
          {"b211 = 0", 2, 1, 1, zero},        {"b221 = -uf", 2, 2, 1, nu * R[5]},
          {"b212 = -ug", 2, 1, 2, nu * R[6]}, {"b222 = -uh", 2, 2, 2, nu * R[7]}};
      for (const auto& e : expect) {
        if (!(B[Cube::index(e.i, e.j, e.k)] == e.value)) {
          return to_string(R) + ": " + e.label + " fails, got " + to_string(B);
        }
      }
      return "";
    });
    pass = pass && tally.ok();
    parts.push_back(std::string(t.name) + ": " + tally.summary("cubes match all eight entries"));
  }
  return {3, "phi_prime(psi_prime(R)) = -u R entrywise", pass, join(parts)};
}

CriterionResult disc_law(std::uint64_t seed) {
  std::vector<std::string> parts;
  bool pass = true;
  for (const Tier& t : tiers()) {
    Tally tally = run_indexed(1000, [&](long i) -> std::string {
      Sampler s = sampler_for(t, seed, 4, i);
      std::array<BaseElement, 8> e{s.element(3), s.element(3), s.element(3), s.element(3),
                                   s.element(3), s.element(3), s.element(3), s.element(3)};
      Cube A{e};
      GammaElement g{s.any_matrix(2), s.any_matrix(2), s.any_matrix(2), s.unit(2)};
      Cube B = act_raw(A, g);
      BaseElement dets = g.t1.det() * g.t2.det() * g.t3.det();
      BaseElement u2 = g.u * g.u;
      BaseElement want = u2 * u2 * dets * dets * disc_cube(A);
      if (!(disc_cube(B) == want)) return to_string(A) + ": disc law fails";
      for (const Cube* c : {&A, &B}) {
        AttachedForms q = attached_forms(*c);
        BaseElement D = disc_cube(*c);
        if (!(disc_form(q.q1) == D) || !(disc_form(q.q2) == D) || !(disc_form(q.q3) == D)) {
          return to_string(*c) + ": attached discriminants disagree";
        }
      }
      return "";
    });
    pass = pass && tally.ok();
    parts.push_back(std::string(t.name) + ": " + tally.summary("tuples"));
  }
  return {4, "disc law u^4 prod det(T_i)^2 and agreeing form discriminants", pass, join(parts)};
}

CriterionResult form_bijection(std::uint64_t seed, ProductRecorder& rec) {
  const auto& Q = FieldDescriptor::rationals();
  const std::array<long, 4> discs{-4, -20, -23, 40};
  const std::array<long, 4> expected_h{1, 2, 3, 2};
  Tier t = tiers()[0];
  Tally tally = run_indexed(300, [&](long i) -> std::string {
    Sampler s = sampler_for(t, seed, 5, i);
    auto ext = Extension::make(BaseElement(Q, discs[static_cast<std::size_t>(i % 4)]));
    QuadForm f1 = s.form(ext, 3);
    QuadForm f2 = s.form(ext, 3);
    OrientedIdeal I = psi_map(f1, ext);
    OrientedIdeal J = psi_map(f2, ext);
    rec.add("bijection", I, J, mul_ideals(I, J));
    QuadForm back = phi_map(I);
    if (!equivalent_forms(f1, back)) {
      return to_string(f1) + " maps back to inequivalent " + to_string(back);
    }
    return "";
  });

  std::vector<std::string> group_notes;
  bool groups_ok = true;
  for (std::size_t k = 0; k < discs.size(); ++k) {
    Int D(discs[k]);
    long h = expected_h[k];
    ClassNumberCheck cc = class_number_crosscheck(D);
    ClassGroupTable table = class_group_table(D);
    long oriented = D < 0 ? 2 * h : h;
    bool ok = cc.h_forms == h && cc.h_composition == h &&
              static_cast<long>(table.reps.size()) == h && is_group_table(table) &&
              table.oriented_order == oriented;
    groups_ok = groups_ok && ok;
    std::ostringstream os;
    os << "h(" << discs[k] << ")=" << cc.h_forms << "/" << cc.h_composition
       << (ok ? "" : " MISMATCH");
    group_notes.push_back(os.str());

    auto ext = Extension::make(BaseElement(Q, D));
    for (const auto& a : table.reps) {
      for (const auto& b : table.reps) {
        OrientedIdeal I = psi_map(a, ext);
        OrientedIdeal J = psi_map(b, ext);
        rec.add("bijection", I, J, mul_ideals(I, J));
      }
    }
  }
  return {5, "Phi(Psi(Q)) ~ Q and class group orders", tally.ok() && groups_ok,
          tally.summary("forms round-trip") + "; " + join(group_notes)};
}

CriterionResult inverse_identity(std::uint64_t seed, ProductRecorder& rec) {
  std::vector<std::string> parts;
  bool pass = true;
  for (const Tier& t : tiers()) {
    Tally tally = run_indexed(300, [&](long i) -> std::string {
      Sampler s = sampler_for(t, seed, 6, i);
      ReducedCubeSample r = random_fundamental_reduced_cube(s, t.bound, false);
      OrientedIdeal I = s.ideal(r.ext);
      OrientedIdeal J = s.ideal(r.ext);
      OrientedIdeal inv = inverse_ideal(I);
      OrientedIdeal P = mul_ideals(I, inv);
      OrientedIdeal IJ = mul_ideals(I, J);
      rec.add("inverse", I, inv, P);
      rec.add("inverse", I, J, IJ);
      if (!is_unit_ideal(P) || !P.eps().is_all_positive()) {
        return to_string(I) + " times its inverse is " + to_string(P);
      }
      if (!(ideal_norm(IJ) == canonical_associate(ideal_norm(I) * ideal_norm(J)))) {
        return "norm multiplicativity fails for " + to_string(I) + " and " + to_string(J);
      }
      return "";
    });
    pass = pass && tally.ok();
    parts.push_back(std::string(t.name) + ": " + tally.summary("ideals"));
  }
  return {6, "I * I^-1 = ([1, Omega]; +) and N(IJ) = N(I) N(J)", pass, join(parts)};
}

CriterionResult cube_group(std::uint64_t seed) {
  const auto& Q = FieldDescriptor::rationals();
  const std::array<long, 3> discs{-4, -20, 40};
  Tier t = tiers()[0];
  Tally tally = run_indexed(100, [&](long i) -> std::string {
    Sampler s = sampler_for(t, seed, 7, i);
    auto ext = Extension::make(BaseElement(Q, discs[static_cast<std::size_t>(i % 3)]));
    Cube A = s.cube(ext, BaseElement(Q, 1), 3);
    Cube C = compose_cubes(A, inverse_cube(A), ext);
    AttachedForms fc = attached_forms(C);
    QuadForm id = identity_form(ext);
    if (!equivalent_forms(fc.q1, id) || !equivalent_forms(fc.q2, id) ||
        !equivalent_forms(fc.q3, id)) {
      return to_string(A) + " composed with its inverse gives " + to_string(C);
    }
    Cube E = compose_cubes(A, identity_cube(ext), ext);
    if (!forms_match(attached_forms(E), attached_forms(A))) {
      return to_string(A) + " composed with the identity gives " + to_string(E);
    }
    return "";
  });
  return {7, "A * A^-1 in identity class; identity cube neutral", tally.ok(),
          tally.summary("cubes")};
}

CriterionResult naturality(std::uint64_t seed) {
  std::vector<std::string> parts;
  bool pass = true;
  for (const Tier& t : tiers()) {
    Tally triples = run_indexed(500, [&](long i) -> std::string {
      Sampler s = sampler_for(t, seed, 8, i);
      ReducedCubeSample r = random_fundamental_reduced_cube(s, t.bound, false);
      BalancedTriple T = s.triple(r.ext);
      Mat2 M = s.unimodular(3, 1);
      int axis = static_cast<int>(i % 3);
      std::array<OrientedIdeal, 3> ideals = T.ideals();
      ideals[static_cast<std::size_t>(axis)] = with_basis(ideals[static_cast<std::size_t>(axis)], M);
      BalancedTriple T2 = make_balanced(ideals[0], ideals[1], ideals[2]);
      Cube lhs = phi_prime(T2);
      Cube rhs = act_axis(phi_prime(T), axis + 1, M);
      if (!(lhs == rhs)) return "basis change on axis " + std::to_string(axis + 1) + " breaks naturality";
      return "";
    });
    Tally cubes = run_indexed(500, [&](long i) -> std::string {
      Sampler s = sampler_for(t, seed, 8, 500 + i);
      std::array<BaseElement, 8> e{s.element(3), s.element(3), s.element(3), s.element(3),
                                   s.element(3), s.element(3), s.element(3), s.element(3)};
      Cube A{e};
      Mat2 M = s.any_matrix(2);
      int axis = static_cast<int>(i % 3) + 1;
      AttachedForms before = attached_forms(A);
      AttachedForms after = attached_forms(act_axis(A, axis, M));
      Mat2 sub{M.p, -M.r, -M.q, M.s};
      BaseElement det = M.det();
      for (int k = 1; k <= 3; ++k) {
        QuadForm want = k == axis ? substitute_form(before[k], sub) : scale_form(before[k], det);
        if (!(after[k] == want)) {
          return to_string(A) + ": form " + std::to_string(k) + " under axis " +
                 std::to_string(axis) + " gives " + to_string(after[k]) + ", expected " +
                 to_string(want);
        }
      }
      return "";
    });
    pass = pass && triples.ok() && cubes.ok();
    parts.push_back(std::string(t.name) + ": " + triples.summary("triples") + ", " +
                    cubes.summary("cube form laws"));
  }
  return {8, "basis-change naturality and form transformation laws", pass, join(parts)};
}

CriterionResult oracle_independence(const ProductRecorder& rec, std::ostream& log) {
  const auto& products = rec.products();
  std::vector<std::string> reasons(products.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < static_cast<long>(products.size()); ++i) {
    const auto& p = products[static_cast<std::size_t>(i)];
    try {
      ProductAgreement a = check_product(p.I, p.J, p.IJ);
      if (!a.agrees) reasons[static_cast<std::size_t>(i)] = a.reason;
    } catch (const MathError& e) {
      reasons[static_cast<std::size_t>(i)] = std::string(e.kind()) + ": " + e.what();
    }
  }
  long failed = 0;
  std::map<std::string, long> per_suite;
  for (std::size_t i = 0; i < products.size(); ++i) {
    per_suite[products[i].suite]++;
    if (reasons[i].empty()) continue;
    ++failed;
    const auto& p = products[i];
    json::json repro{{"suite", p.suite},
                     {"field", p.I.base().name()},
                     {"disc", json::encode(p.I.ext()->d())},
                     {"I", json::encode(p.I)},
                     {"J", json::encode(p.J)},
                     {"product", json::encode(p.IJ)},
                     {"reason", reasons[i]}};
    log << "oracle reproducer: " << repro.dump() << "\n";
  }
  std::ostringstream os;
  os << (static_cast<long>(products.size()) - failed) << "/" << products.size()
     << " products agree (";
  bool first = true;
  for (const auto& [suite, n] : per_suite) {
    os << (first ? "" : ", ") << suite << " " << n;
    first = false;
  }
  os << ")";
  bool pass = failed == 0 && per_suite.size() == 3;
  return {9, "naive module product agrees with mul_ideals", pass, os.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& log) {
  ProductRecorder rec;
  std::vector<CriterionResult> out;
  auto step = [&](CriterionResult r) {
    log << "criterion " << r.id << (r.pass ? " done" : " failed") << std::endl;
    out.push_back(std::move(r));
  };
  step(worked_example());
  step(cube_law(seed, rec));
  step(round_trip(seed));
  step(disc_law(seed));
  step(form_bijection(seed, rec));
  step(inverse_identity(seed, rec));
  step(cube_group(seed));
  step(naturality(seed));
  step(oracle_independence(rec, log));
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name +
         ": " + r.detail;
}

}  // namespace cubelaw

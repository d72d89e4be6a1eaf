#include "cubelaw/quadratic_form.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cubelaw {

QuadForm make_form(const FieldDescriptor& f, long a, long b, long c) {
  return {BaseElement(f, a), BaseElement(f, b), BaseElement(f, c)};
}

bool form_lex_less(const QuadForm& x, const QuadForm& y) {
  auto key = [](const QuadForm& q) {
    return std::tie(q.a.u(), q.a.v(), q.b.u(), q.b.v(), q.c.u(), q.c.v());
  };
  return key(x) < key(y);
}

BaseElement disc_form(const QuadForm& Q) {
  return Q.b * Q.b - BaseElement(Q.field(), 4) * Q.a * Q.c;
}

bool is_primitive(const QuadForm& Q) {
  std::array<BaseElement, 3> xs{Q.a, Q.b, Q.c};
  if (Q.a.is_zero() && Q.b.is_zero() && Q.c.is_zero()) return false;
  return is_unit(gcd_all(xs));
}

QuadForm negate_form(const QuadForm& Q) { return {-Q.a, -Q.b, -Q.c}; }

QuadForm scale_form(const QuadForm& Q, const BaseElement& k) { return {k * Q.a, k * Q.b, k * Q.c}; }

QuadForm substitute_form(const QuadForm& Q, const Mat2& T) {
  const auto& [p, q, r, s] = T;
  BaseElement two(Q.field(), 2);
  return {Q.a * p * p + Q.b * p * r + Q.c * r * r,
          two * Q.a * p * q + Q.b * (p * s + q * r) + two * Q.c * r * s,
          Q.a * q * q + Q.b * q * s + Q.c * s * s};
}

QuadForm act_form(const QuadForm& Q, const Mat2& T, const BaseElement& u) {
  BaseElement d = T.det();
  if (!is_unit(d) || !is_totally_positive(d)) {
    throw DeterminantNotInUnitGroup("det T = " + to_string(d) + " is not a totally positive unit");
  }
  if (!is_unit(u) || !is_totally_positive(u)) {
    throw DeterminantNotInUnitGroup("scalar " + to_string(u) + " is not a totally positive unit");
  }
  return scale_form(substitute_form(Q, T), u);
}

QuadForm act_form(const QuadForm& Q, const Mat2& T) {
  return act_form(Q, T, BaseElement(Q.field(), 1));
}

QuadForm identity_form(const ExtensionPtr& ext) {
  return {BaseElement(ext->base(), 1), ext->w(), ext->z()};
}

QuadForm inverse_form(const QuadForm& Q) { return {Q.a, -Q.b, Q.c}; }

OrientedIdeal psi_map(const QuadForm& Q, const ExtensionPtr& ext) {
  const auto& f = ext->base();
  if (&Q.field() != &f) throw DescriptorMismatch("form and extension over different base fields");
  if (!is_primitive(Q)) throw NotPrimitive(to_string(Q) + " is not primitive");
  ExtElement root = sqrt_disc(ext, disc_form(Q));
  QuadForm P = Q;
  for (long k = 1; P.a.is_zero(); ++k) {
    if (k > 3) throw InvalidInput("leading coefficient cannot be made nonzero");
    BaseElement one(f, 1), zero(f, 0);
    P = substitute_form(Q, Mat2{one, zero, BaseElement(f, k), one});
  }
  ExtElement alpha = ExtElement::scalar(ext, P.a);
  BaseRational half(BaseElement(f, 1), 2);
  ExtElement beta = half * (root - ExtElement::scalar(ext, P.b));
  return OrientedIdeal::make(std::move(alpha), std::move(beta), sign_vector(P.a));
}

QuadForm phi_map(const OrientedIdeal& I) {
  if (!is_aligned(I)) {
    throw AlignmentViolated("orientation of " + to_string(I) + " disagrees with sgn det M");
  }
  BaseRational d = det_m(I);
  const ExtElement& al = I.alpha();
  const ExtElement& be = I.beta();
  BaseRational a = rel_norm(al) / d;
  BaseRational b = -(rel_trace(conj(al) * be)) / d;
  BaseRational c = rel_norm(be) / d;
  return {a.integral(), b.integral(), c.integral()};
}

QuadForm compose_forms(const QuadForm& Q1, const QuadForm& Q2, const ExtensionPtr& ext) {
  return phi_map(align_basis(mul_ideals(psi_map(Q1, ext), psi_map(Q2, ext))));
}

// ------------------------------------------------------------- reduction (Q)

namespace {

struct IForm {
  Int a, b, c;
  auto key() const { return std::tie(a, b, c); }
  bool operator==(const IForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct IMat {
  Int p, q, r, s;
  IMat operator*(const IMat& o) const {
    return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
  }
};

struct Tracked {
  IForm f;
  IMat t{1, 0, 0, 1};

  void translate(const Int& k) {
    if (k == 0) return;
    f = {f.a, f.b + 2 * f.a * k, f.a * k * k + f.b * k + f.c};
    t = t * IMat{1, k, 0, 1};
  }
  void swap() {
    f = {f.c, -f.b, f.a};
    t = t * IMat{0, -1, 1, 0};
  }
};

IForm to_iform(const QuadForm& Q) {
  if (!Q.field().is_rational()) {
    throw UnsupportedBaseField("form reduction is only available over Q");
  }
  return {Q.a.u(), Q.b.u(), Q.c.u()};
}

QuadForm from_iform(const IForm& f) {
  const auto& q = FieldDescriptor::rationals();
  return {BaseElement(q, f.a), BaseElement(q, f.b), BaseElement(q, f.c)};
}

Mat2 from_imat(const IMat& m) {
  const auto& q = FieldDescriptor::rationals();
  return {BaseElement(q, m.p), BaseElement(q, m.q), BaseElement(q, m.r), BaseElement(q, m.s)};
}

Int idisc(const IForm& f) { return f.b * f.b - 4 * f.a * f.c; }

void reduce_positive_definite(Tracked& x) {
  for (;;) {
    x.translate(floor_div(x.f.a - x.f.b, 2 * x.f.a));
    if (x.f.a > x.f.c || (x.f.a == x.f.c && x.f.b < 0)) {
      x.swap();
    } else {
      return;
    }
  }
}

bool definite_reduced(const IForm& f) {
  if (f.a <= 0) return false;
  Int ab = abs_int(f.b);
  if (ab > f.a || f.a > f.c) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

bool indefinite_reduced(const IForm& f, const Int& D, const Int& s) {
  if (f.b <= 0 || f.b > s) return false;
  Int two_a = 2 * abs_int(f.a);
  Int hi = f.b + two_a;
  if (hi * hi <= D) return false;
  Int lo = two_a - f.b;
  return lo < 0 || lo * lo < D;
}

void normalize_indefinite(Tracked& x, const Int& s) {
  Int A = abs_int(x.f.a);
  Int top = A > s ? A : s;
  Int target = x.f.b + 2 * A * floor_div(top - x.f.b, 2 * A);
  x.translate((target - x.f.b) / (2 * x.f.a));
}

void rho(Tracked& x, const Int& s) {
  x.swap();
  normalize_indefinite(x, s);
}

Tracked reduce_indefinite_to_cycle(const IForm& f, const Int& D) {
  Int s = isqrt(D);
  Tracked x{f};
  normalize_indefinite(x, s);
  for (long guard = 0; !indefinite_reduced(x.f, D, s); ++guard) {
    if (guard > 100000) throw InvalidInput("indefinite reduction did not converge");
    rho(x, s);
  }
  return x;
}

// Walks the cycle of the reduced form x, returning every member with the
// transform from the original input.
std::vector<Tracked> walk_cycle(const Tracked& start, const Int& D) {
  Int s = isqrt(D);
  std::vector<Tracked> out{start};
  Tracked cur = start;
  for (;;) {
    rho(cur, s);
    if (cur.f == start.f) return out;
    out.push_back(cur);
    if (out.size() > 100000) throw InvalidInput("reduction cycle too long");
  }
}

Tracked canonical_tracked(const IForm& f) {
  Int D = idisc(f);
  if (D == 0 || is_perfect_square(D)) {
    throw InvalidInput("reduction needs a non-square discriminant");
  }
  if (D < 0) {
    if (f.a > 0) {
      Tracked x{f};
      reduce_positive_definite(x);
      return x;
    }
    Tracked x{{-f.a, -f.b, -f.c}};
    reduce_positive_definite(x);
    x.f = {-x.f.a, -x.f.b, -x.f.c};
    return x;
  }
  std::vector<Tracked> cyc = walk_cycle(reduce_indefinite_to_cycle(f, D), D);
  return *std::min_element(cyc.begin(), cyc.end(), [](const Tracked& l, const Tracked& r) {
    return l.f.key() < r.f.key();
  });
}

}  // namespace

FormReduction reduce_form(const QuadForm& Q) {
  Tracked t = canonical_tracked(to_iform(Q));
  return {from_iform(t.f), from_imat(t.t)};
}

bool is_reduced(const QuadForm& Q) {
  IForm f = to_iform(Q);
  Int D = idisc(f);
  if (D < 0) return f.a > 0 ? definite_reduced(f) : definite_reduced({-f.a, -f.b, -f.c});
  return indefinite_reduced(f, D, isqrt(D));
}

std::optional<Mat2> equivalence_transform(const QuadForm& Q1, const QuadForm& Q2) {
  IForm f1 = to_iform(Q1);
  IForm f2 = to_iform(Q2);
  if (idisc(f1) != idisc(f2)) return std::nullopt;
  Tracked r1 = canonical_tracked(f1);
  Tracked r2 = canonical_tracked(f2);
  if (!(r1.f == r2.f)) return std::nullopt;
  IMat inv2{r2.t.s, -r2.t.q, -r2.t.r, r2.t.p};
  return from_imat(r1.t * inv2);
}

bool equivalent_forms(const QuadForm& Q1, const QuadForm& Q2) {
  return equivalence_transform(Q1, Q2).has_value();
}

std::vector<QuadForm> reduction_cycle(const QuadForm& Q) {
  IForm f = to_iform(Q);
  Int D = idisc(f);
  if (D <= 0 || is_perfect_square(D)) throw InvalidInput("cycles exist for non-square D > 0 only");
  if (!indefinite_reduced(f, D, isqrt(D))) throw InvalidInput(to_string(Q) + " is not reduced");
  std::vector<QuadForm> out;
  for (const auto& t : walk_cycle(Tracked{f}, D)) out.push_back(from_iform(t.f));
  return out;
}

// -------------------------------------------------------------- enumeration

namespace {

void check_enumerable(const Int& D) {
  if (abs_int(D) > kEnumerateBound) {
    throw OutOfRange("|D| = " + to_decimal(abs_int(D)) + " exceeds " +
                     std::to_string(kEnumerateBound));
  }
  if (D == 0 || is_perfect_square(D)) throw NotFundamental(to_decimal(D) + " is a square");
  if (!is_fundamental(BaseElement(FieldDescriptor::rationals(), D))) {
    throw NotFundamental(to_decimal(D) + " is not a fundamental discriminant");
  }
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Outer loop bound: leading coefficients for D < 0, middle coefficients for D > 0.
long outer_bound(const Int& D) {
  if (D < 0) return isqrt(Int(-D / 3)).get_si();
  return isqrt(D).get_si();
}

// Reduced primitive forms with a fixed outer index.
std::vector<IForm> reduced_slice(const Int& D, long idx) {
  std::vector<IForm> out;
  if (D < 0) {
    Int a = idx;
    for (Int b = -a + 1; b <= a; ++b) {
      Int num = b * b - D;
      if (num % (4 * a) != 0) continue;
      Int c = num / (4 * a);
      IForm f{a, b, c};
      if (definite_reduced(f) && gcd3(a, b, c) == 1) out.push_back(f);
    }
    return out;
  }
  Int b = idx;
  Int s = isqrt(D);
  Int n = D - b * b;
  if (n <= 0 || n % 4 != 0) return out;
  n /= 4;
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d * d != n) divisors.push_back(n / d);
  }
  for (const Int& d : divisors) {
    for (const Int& a : {d, Int(-d)}) {
      IForm f{a, b, -(n / a)};
      if (indefinite_reduced(f, D, s) && gcd3(f.a, f.b, f.c) == 1) out.push_back(f);
    }
  }
  return out;
}

std::vector<QuadForm> finish_enumeration(const Int& D, std::vector<IForm> all) {
  std::sort(all.begin(), all.end(), [](const IForm& x, const IForm& y) { return x.key() < y.key(); });
  std::vector<QuadForm> out;
  if (D < 0) {
    std::sort(all.begin(), all.end(), [](const IForm& x, const IForm& y) {
      return std::make_tuple(x.a, abs_int(x.b), -x.b) < std::make_tuple(y.a, abs_int(y.b), -y.b);
    });
    for (const auto& f : all) out.push_back(from_iform(f));
    for (const auto& f : all) out.push_back(from_iform({-f.a, -f.b, -f.c}));
    return out;
  }
  std::set<std::tuple<Int, Int, Int>> seen;
  for (const auto& f : all) {
    if (seen.count({f.a, f.b, f.c})) continue;
    std::vector<Tracked> cyc = walk_cycle(Tracked{f}, D);
    IForm best = f;
    for (const auto& t : cyc) {
      seen.insert({t.f.a, t.f.b, t.f.c});
      if (t.f.key() < best.key()) best = t.f;
    }
    out.push_back(from_iform(best));
  }
  std::sort(out.begin(), out.end(), form_lex_less);
  return out;
}

}  // namespace

std::vector<QuadForm> enumerate_reduced_serial(const Int& D) {
  check_enumerable(D);
  std::vector<IForm> all;
  long hi = outer_bound(D);
  for (long i = 1; i <= hi; ++i) {
    auto part = reduced_slice(D, i);
    all.insert(all.end(), part.begin(), part.end());
  }
  return finish_enumeration(D, std::move(all));
}

std::vector<QuadForm> enumerate_reduced(const Int& D) {
  check_enumerable(D);
  long hi = outer_bound(D);
  std::vector<std::vector<IForm>> slices(static_cast<std::size_t>(hi + 1));
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 1; i <= hi; ++i) slices[static_cast<std::size_t>(i)] = reduced_slice(D, i);
  std::vector<IForm> all;
  for (auto& s : slices) all.insert(all.end(), s.begin(), s.end());
  return finish_enumeration(D, std::move(all));
}

ClassGroupTable class_group_table(const Int& D) {
  const auto& q = FieldDescriptor::rationals();
  ClassGroupTable t;
  t.disc = D;
  for (const auto& f : enumerate_reduced(D)) {
    if (D > 0 || f.a.u() > 0) t.reps.push_back(f);
  }
  auto ext = Extension::make(BaseElement(q, D));
  auto index_of = [&](const QuadForm& f) {
    QuadForm r = reduce_form(f).form;
    for (std::size_t i = 0; i < t.reps.size(); ++i) {
      if (t.reps[i] == r) return static_cast<int>(i);
    }
    throw InvalidInput("composed form " + to_string(f) + " falls outside the enumerated classes");
  };
  const std::size_t h = t.reps.size();
  t.table.assign(h, std::vector<int>(h, -1));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      t.table[i][j] = index_of(compose_forms(t.reps[i], t.reps[j], ext));
    }
  }
  t.identity = index_of(identity_form(ext));
  t.oriented_order = static_cast<int>(D < 0 ? 2 * h : h);
  return t;
}

bool is_group_table(const ClassGroupTable& t) {
  const int n = static_cast<int>(t.table.size());
  if (t.identity < 0 || t.identity >= n) return false;
  for (int i = 0; i < n; ++i) {
    std::set<int> row, col;
    for (int j = 0; j < n; ++j) {
      int v = t.table[i][j];
      if (v < 0 || v >= n) return false;
      row.insert(v);
      col.insert(t.table[j][i]);
      if (t.table[i][j] != t.table[j][i]) return false;
    }
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
    if (t.table[t.identity][i] != i) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]]) return false;
      }
    }
  }
  return true;
}

std::string to_string(const QuadForm& Q) {
  auto coef = [](const BaseElement& x) {
    std::string s = to_string(x);
    return (x.u() != 0 && x.v() != 0) ? "(" + s + ")" : s;
  };
  auto term = [&](const BaseElement& x, const char* mono, bool first) {
    std::string s = coef(x);
    if (first) return s + " " + mono;
    if (s.front() == '-') return " - " + s.substr(1) + " " + mono;
    return " + " + s + " " + mono;
  };
  return term(Q.a, "x^2", true) + term(Q.b, "xy", false) + term(Q.c, "y^2", false);
}

}  // namespace cubelaw

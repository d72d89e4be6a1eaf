#include "cubelaw/base_field.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace cubelaw {

FieldDescriptor::FieldDescriptor(FieldKind kind, std::string name, Int t, Int n, int r, Int uu,
                                 Int uv)
    : kind_(kind),
      name_(std::move(name)),
      t_(std::move(t)),
      n_(std::move(n)),
      r_(r),
      unit_u_(std::move(uu)),
      unit_v_(std::move(uv)) {}

const FieldDescriptor& FieldDescriptor::rationals() {
  static const FieldDescriptor q(FieldKind::Rational, "Q", 0, 0, 1, -1, 0);
  return q;
}

const FieldDescriptor& FieldDescriptor::sqrt2() {
  static const FieldDescriptor k(FieldKind::RealQuadratic, "Q-sqrt2", 0, 2, 2, 1, 1);
  return k;
}

const FieldDescriptor& FieldDescriptor::by_name(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "Q-sqrt2") return sqrt2();
  throw InvalidInput("unknown base field '" + std::string(name) + "' (expected Q or Q-sqrt2)");
}

// ---------------------------------------------------------------- SignVector

SignVector::SignVector(std::vector<int> signs) : s_(std::move(signs)) {
  for (int x : s_) {
    if (x != 1 && x != -1) throw InvalidInput("sign entries must be +1 or -1");
  }
}

SignVector SignVector::all_positive(int r) {
  return SignVector(std::vector<int>(static_cast<std::size_t>(r), 1));
}

bool SignVector::is_all_positive() const {
  return std::all_of(s_.begin(), s_.end(), [](int x) { return x == 1; });
}

SignVector operator*(const SignVector& x, const SignVector& y) {
  if (x.s_.size() != y.s_.size()) throw DescriptorMismatch("sign vectors of different length");
  std::vector<int> out(x.s_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.s_[i] * y.s_[i];
  return SignVector(std::move(out));
}

// --------------------------------------------------------------- BaseElement

BaseElement::BaseElement(const FieldDescriptor& field, Int u, Int v)
    : field_(&field), u_(std::move(u)), v_(std::move(v)) {
  if (field.is_rational() && v_ != 0) {
    throw InvalidInput("a rational integer cannot have a theta coordinate");
  }
}

BaseElement BaseElement::fundamental_unit(const FieldDescriptor& field) {
  return BaseElement(field, field.unit_u(), field.unit_v());
}

void BaseElement::require_same_field(const BaseElement& o, const char* op) const {
  if (field_ != o.field_) {
    throw DescriptorMismatch(std::string("operands of ") + op + " live over " + field_->name() +
                             " and " + o.field_->name());
  }
}

BaseElement& BaseElement::operator+=(const BaseElement& o) {
  require_same_field(o, "+");
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

BaseElement& BaseElement::operator-=(const BaseElement& o) {
  require_same_field(o, "-");
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

BaseElement& BaseElement::operator*=(const BaseElement& o) {
  require_same_field(o, "*");
  if (field_->is_rational()) {
    u_ *= o.u_;
    return *this;
  }
  Int vv = v_ * o.v_;
  Int nu = u_ * o.u_ + field_->n() * vv;
  Int nv = u_ * o.v_ + v_ * o.u_ + field_->t() * vv;
  u_ = std::move(nu);
  v_ = std::move(nv);
  return *this;
}

bool operator==(const BaseElement& x, const BaseElement& y) {
  return x.field_ == y.field_ && x.u_ == y.u_ && x.v_ == y.v_;
}

BaseElement conj(const BaseElement& x) {
  if (x.field().is_rational()) return x;
  return BaseElement(x.field(), x.u() + x.v() * x.field().t(), -x.v());
}

namespace {

// x * conj(x) as an integer. Over Q this is x^2 rather than the norm.
Int conj_norm(const BaseElement& x) {
  const auto& f = x.field();
  return x.u() * x.u() + f.t() * x.u() * x.v() - f.n() * x.v() * x.v();
}

}  // namespace

Int norm(const BaseElement& x) {
  if (x.field().is_rational()) return x.u();
  return conj_norm(x);
}

Int trace(const BaseElement& x) {
  if (x.field().is_rational()) return x.u();
  return 2 * x.u() + x.v() * x.field().t();
}

Int content(const BaseElement& x) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.u().get_mpz_t(), x.v().get_mpz_t());
  return g;
}

namespace {

int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// Sign of A + B*sqrt(delta) for a non-square delta > 0.
int sign_of_surd(const Int& a, const Int& b, const Int& delta) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return cmp(a * a, b * b * delta) > 0 ? sa : sb;
}

}  // namespace

SignVector sign_vector(const BaseElement& x) {
  if (x.is_zero()) throw ZeroInput("sign vector of zero");
  const auto& f = x.field();
  if (f.is_rational()) return SignVector({sgn(x.u())});
  Int a = 2 * x.u() + x.v() * f.t();
  Int delta = f.theta_disc();
  return SignVector({sign_of_surd(a, x.v(), delta), sign_of_surd(a, Int(-x.v()), delta)});
}

bool is_unit(const BaseElement& x) { return abs_int(norm(x)) == 1; }

bool is_totally_positive(const BaseElement& x) {
  return !x.is_zero() && sign_vector(x).is_all_positive();
}

BaseElement unit_inverse(const BaseElement& x) {
  Int n = conj_norm(x);
  if (abs_int(n) != 1) throw InvalidInput("not a unit: " + to_string(x));
  return n * conj(x);
}

BaseElement power(const BaseElement& x, long e) {
  BaseElement base = e < 0 ? unit_inverse(x) : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  BaseElement acc(x.field(), 1);
  while (k > 0) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

BaseElement unit_with_signs(const FieldDescriptor& field, const SignVector& target) {
  if (target.size() != field.real_embeddings()) {
    throw DescriptorMismatch("sign vector length does not match the field");
  }
  BaseElement eps = BaseElement::fundamental_unit(field);
  for (const BaseElement& cand : {BaseElement(field, 1), BaseElement(field, -1), eps, -eps}) {
    if (sign_vector(cand) == target) return cand;
  }
  throw InvalidInput("no unit with the requested signs");
}

BaseElement totally_positive_unit_generator(const FieldDescriptor& field) {
  if (field.is_rational()) return BaseElement(field, 1);
  BaseElement eps = BaseElement::fundamental_unit(field);
  for (const BaseElement& cand : {eps, -eps, eps * eps}) {
    if (is_totally_positive(cand)) return cand;
  }
  throw InvalidInput("field has no totally positive generator candidate");
}

namespace {

// Sign of sigma_1(x) - 1.
int first_embedding_vs_one(const BaseElement& x) {
  return sign_vector(x - BaseElement(x.field(), 1))[0];
}

}  // namespace

std::optional<BaseElement> sqrt_of_totally_positive_unit_square(const BaseElement& q) {
  const auto& f = q.field();
  if (q.is_one()) return BaseElement(f, 1);
  if (f.is_rational() || !is_unit(q) || !is_totally_positive(q)) return std::nullopt;
  BaseElement g = totally_positive_unit_generator(f);
  BaseElement g_inv = unit_inverse(g);
  int dir = first_embedding_vs_one(q);
  BaseElement step = dir > 0 ? g_inv * g_inv : g * g;
  BaseElement root_step = dir > 0 ? g : g_inv;
  BaseElement cur = q;
  BaseElement acc(f, 1);
  while (!cur.is_one()) {
    cur *= step;
    acc *= root_step;
    if (cur.is_one()) break;
    if (first_embedding_vs_one(cur) != dir) return std::nullopt;
  }
  return acc;
}

std::optional<BaseElement> exact_sqrt(const BaseElement& x) {
  const auto& f = x.field();
  if (x.is_zero()) return x;
  if (f.is_rational()) {
    if (!is_perfect_square(x.u())) return std::nullopt;
    return BaseElement(f, isqrt(x.u()));
  }
  // (c + d theta)^2 with theta^2 = n (t = 0 in the shipped quadratic field).
  if (f.t() != 0) throw UnsupportedBaseField("exact_sqrt requires t = 0");
  Int nx = conj_norm(x);
  if (!is_perfect_square(nx)) return std::nullopt;
  Int m = isqrt(nx);
  for (const Int& s : {m, Int(-m)}) {
    Int c2 = x.u() + s;
    if (c2 < 0 || c2 % 2 != 0) continue;
    c2 /= 2;
    Int d2num = x.u() - s;
    Int den = 2 * f.n();
    if (d2num < 0 || d2num % den != 0) continue;
    Int d2 = d2num / den;
    if (!is_perfect_square(c2) || !is_perfect_square(d2)) continue;
    Int c = isqrt(c2);
    Int d = isqrt(d2);
    for (const Int& dd : {d, Int(-d)}) {
      BaseElement y(f, c, dd);
      if (y * y == x) return y;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ Division

DivMod divmod_euclid(const BaseElement& x, const BaseElement& y) {
  if (y.is_zero()) throw DivisionByZero("divmod_euclid by zero");
  if (&x.field() != &y.field()) throw DescriptorMismatch("divmod_euclid across fields");
  BaseElement num = x * conj(y);
  Int n = conj_norm(y);
  BaseElement q(x.field(), round_ties_to_zero(num.u(), n), round_ties_to_zero(num.v(), n));
  BaseElement rem = x - q * y;
  return {std::move(q), std::move(rem)};
}

std::optional<BaseElement> exact_quotient(const BaseElement& x, const BaseElement& y) {
  if (y.is_zero()) throw DivisionByZero("exact_quotient by zero");
  BaseElement num = x * conj(y);
  Int n = conj_norm(y);
  if (!mpz_divisible_p(num.u().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.v().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return BaseElement(x.field(), Int(num.u() / n), Int(num.v() / n));
}

bool divides(const BaseElement& d, const BaseElement& x) {
  if (d.is_zero()) return x.is_zero();
  return exact_quotient(x, d).has_value();
}

BaseElement divide_exact(const BaseElement& x, const BaseElement& y) {
  auto q = exact_quotient(x, y);
  if (!q) throw InvalidInput(to_string(y) + " does not divide " + to_string(x));
  return *q;
}

namespace {

auto associate_key(const BaseElement& x) {
  return std::make_tuple(abs_int(x.u()), abs_int(x.v()), x.v() < 0);
}

}  // namespace

BaseElement canonical_associate(const BaseElement& x) {
  if (x.is_zero()) return x;
  const auto& f = x.field();
  if (f.is_rational()) return BaseElement(f, abs_int(x.u()));
  BaseElement y = x * unit_with_signs(f, sign_vector(x));
  BaseElement g = totally_positive_unit_generator(f);
  BaseElement g_inv = unit_inverse(g);
  for (;;) {
    BaseElement up = y * g;
    BaseElement down = y * g_inv;
    if (associate_key(up) < associate_key(y)) {
      y = std::move(up);
    } else if (associate_key(down) < associate_key(y)) {
      y = std::move(down);
    } else {
      return y;
    }
  }
}

BaseElement gcd(const BaseElement& x, const BaseElement& y) {
  if (x.is_zero() && y.is_zero()) throw ZeroInput("gcd(0, 0)");
  BaseElement a = x;
  BaseElement b = y;
  while (!b.is_zero()) {
    BaseElement r = divmod_euclid(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a);
}

BaseElement gcd_all(std::span<const BaseElement> xs) {
  if (xs.empty()) throw ZeroInput("gcd of an empty list");
  BaseElement g(xs.front().field(), 0);
  for (const auto& x : xs) {
    if (!x.is_zero()) g = g.is_zero() ? canonical_associate(x) : gcd(g, x);
  }
  if (g.is_zero()) throw ZeroInput("gcd of zeros");
  return g;
}

ExtendedGcd xgcd(const BaseElement& x, const BaseElement& y) {
  if (x.is_zero() && y.is_zero()) throw ZeroInput("xgcd(0, 0)");
  const auto& f = x.field();
  BaseElement r0 = x, r1 = y;
  BaseElement s0(f, 1), s1(f, 0);
  BaseElement t0(f, 0), t1(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod_euclid(r0, r1);
    BaseElement s2 = s0 - q * s1;
    BaseElement t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  BaseElement g = canonical_associate(r0);
  BaseElement mu = divide_exact(g, r0);
  return {g, mu * s0, mu * t0};
}

std::optional<BaseElement> is_qr_mod4(const BaseElement& d) {
  const auto& f = d.field();
  std::vector<BaseElement> residues{BaseElement(f, 0), BaseElement(f, 1)};
  if (!f.is_rational()) {
    residues.emplace_back(f, 0, 1);
    residues.emplace_back(f, 1, 1);
  }
  for (const auto& w : residues) {
    BaseElement diff = w * w - d;
    if (diff.u() % 4 == 0 && diff.v() % 4 == 0) return w;
  }
  return std::nullopt;
}

namespace {

std::vector<Int> rational_prime_factors(Int m) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Primes of O_K above the rational prime p, as canonical associates.
std::vector<BaseElement> primes_above(const FieldDescriptor& f, const Int& p) {
  if (f.is_rational()) return {BaseElement(f, p)};
  if (f.t() != 0) throw UnsupportedBaseField("prime splitting requires t = 0");
  // u^2 - n v^2 = +-p, searched over small v.
  Int bound = isqrt(p) + 2;
  for (Int v = 0; v <= bound; ++v) {
    Int nv2 = f.n() * v * v;
    for (const Int& u2 : {Int(nv2 + p), Int(nv2 - p)}) {
      if (!is_perfect_square(u2)) continue;
      BaseElement pi = canonical_associate(BaseElement(f, isqrt(u2), v));
      BaseElement pi_bar = canonical_associate(conj(pi));
      if (pi == pi_bar) return {pi};
      return {pi, pi_bar};
    }
  }
  return {BaseElement(f, p)};
}

}  // namespace

std::vector<BaseElement> factor_element(const BaseElement& x, const Int& norm_bound) {
  if (x.is_zero()) throw ZeroInput("factor_element of zero");
  Int m = abs_int(norm(x));
  if (m > norm_bound) {
    throw NormBoundExceeded("|N(x)| = " + to_decimal(m) + " exceeds the factoring bound " +
                            to_decimal(norm_bound));
  }
  const auto& f = x.field();
  std::vector<BaseElement> out;
  BaseElement rest = x;
  for (const Int& p : rational_prime_factors(m)) {
    for (const BaseElement& pi : primes_above(f, p)) {
      while (auto q = exact_quotient(rest, pi)) {
        out.push_back(pi);
        rest = std::move(*q);
      }
    }
  }
  if (!is_unit(rest)) throw InvalidInput("factorisation left a non-unit cofactor");
  std::sort(out.begin(), out.end(), [](const BaseElement& a, const BaseElement& b) {
    return std::make_tuple(abs_int(norm(a)), a.u(), a.v()) <
           std::make_tuple(abs_int(norm(b)), b.u(), b.v());
  });
  return out;
}

std::string to_string(const BaseElement& x) {
  if (x.v() == 0) return to_decimal(x.u());
  std::string tail;
  Int av = abs_int(x.v());
  if (av != 1) tail = to_decimal(av) + "*";
  tail += "sqrt2";
  if (x.u() == 0) return (x.v() < 0 ? "-" : "") + tail;
  return to_decimal(x.u()) + (x.v() < 0 ? " - " : " + ") + tail;
}

// -------------------------------------------------------------- BaseRational

BaseRational::BaseRational(BaseElement num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g;
  Int c = content(num_);
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ = BaseElement(num_.field(), Int(num_.u() / g), Int(num_.v() / g));
    den_ /= g;
  }
}

const BaseElement& BaseRational::integral() const {
  if (den_ != 1) throw NonIntegralEntry(to_string(*this) + " is not integral");
  return num_;
}

BaseRational BaseRational::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero");
  return BaseRational(den_ * conj(num_), conj_norm(num_));
}

BaseRational operator+(const BaseRational& x, const BaseRational& y) {
  return BaseRational(y.den_ * x.num_ + x.den_ * y.num_, x.den_ * y.den_);
}

BaseRational operator-(const BaseRational& x, const BaseRational& y) {
  return BaseRational(y.den_ * x.num_ - x.den_ * y.num_, x.den_ * y.den_);
}

BaseRational operator*(const BaseRational& x, const BaseRational& y) {
  return BaseRational(x.num_ * y.num_, x.den_ * y.den_);
}

BaseRational operator/(const BaseRational& x, const BaseRational& y) { return x * y.inverse(); }

SignVector sign_vector(const BaseRational& x) { return sign_vector(x.num()); }

BaseRational conj(const BaseRational& x) { return BaseRational(conj(x.num()), x.den()); }

BaseRational canonical_associate(const BaseRational& x) {
  return BaseRational(canonical_associate(x.num()), x.den());
}

std::string to_string(const BaseRational& x) {
  if (x.den() == 1) return to_string(x.num());
  std::string n = to_string(x.num());
  if (x.num().v() != 0 && x.num().u() != 0) n = "(" + n + ")";
  return n + "/" + to_decimal(x.den());
}

// ---------------------------------------------------------------------- Mat2

Mat2 Mat2::identity(const FieldDescriptor& field) {
  return {BaseElement(field, 1), BaseElement(field, 0), BaseElement(field, 0),
          BaseElement(field, 1)};
}

Mat2 Mat2::inverse() const {
  BaseElement di = unit_inverse(det());
  return {di * s, -(di * q), -(di * r), di * p};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s, x.r * y.p + x.s * y.r,
          x.r * y.q + x.s * y.s};
}

// ----------------------------------------------------------------------- HNF

namespace {

struct TrackedRow {
  Coords vec;
  std::vector<BaseElement> combo;

  void subtract(const BaseElement& k, const TrackedRow& o) {
    for (int i = 0; i < 2; ++i) vec[i] -= k * o.vec[i];
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] -= k * o.combo[j];
  }
  void scale(const BaseElement& k) {
    for (auto& x : vec) x *= k;
    for (auto& x : combo) x *= k;
  }
};

// Euclid on coordinate `col` across the given rows; returns the index of the
// single row left with a nonzero entry, or -1 if every entry is zero.
int euclid_column(std::vector<TrackedRow>& rows, const std::vector<std::size_t>& idx, int col) {
  for (;;) {
    int pivot = -1;
    Int best;
    int nonzero = 0;
    for (std::size_t i : idx) {
      const auto& x = rows[i].vec[col];
      if (x.is_zero()) continue;
      ++nonzero;
      Int nn = abs_int(norm(x));
      if (pivot < 0 || nn < best) {
        pivot = static_cast<int>(i);
        best = nn;
      }
    }
    if (nonzero <= 1) return pivot;
    const TrackedRow& prow = rows[static_cast<std::size_t>(pivot)];
    for (std::size_t i : idx) {
      if (static_cast<int>(i) == pivot || rows[i].vec[col].is_zero()) continue;
      BaseElement q = divmod_euclid(rows[i].vec[col], prow.vec[col]).quot;
      rows[i].subtract(q, prow);
    }
  }
}

}  // namespace

Hnf2 hnf_rank2(std::span<const Coords> generators) {
  if (generators.empty()) throw RankDeficient("no generators");
  const auto& f = generators.front()[0].field();
  const std::size_t m = generators.size();
  std::vector<TrackedRow> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<BaseElement> combo(m, BaseElement(f, 0));
    combo[j] = BaseElement(f, 1);
    rows.push_back({generators[j], std::move(combo)});
  }

  std::vector<std::size_t> all(m);
  for (std::size_t j = 0; j < m; ++j) all[j] = j;
  int p_idx = euclid_column(rows, all, 1);
  if (p_idx < 0) throw RankDeficient("all second coordinates vanish");
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < m; ++j) {
    if (static_cast<int>(j) != p_idx) rest.push_back(j);
  }
  int a_idx = euclid_column(rows, rest, 0);
  if (a_idx < 0) throw RankDeficient("generators span a module of rank < 2");

  TrackedRow top = rows[static_cast<std::size_t>(a_idx)];
  TrackedRow bottom = rows[static_cast<std::size_t>(p_idx)];
  top.scale(divide_exact(canonical_associate(top.vec[0]), top.vec[0]));
  bottom.scale(divide_exact(canonical_associate(bottom.vec[1]), bottom.vec[1]));

  const BaseElement& a = top.vec[0];
  BaseElement num = bottom.vec[0] * conj(a);
  Int na = conj_norm(a);
  BaseElement k(f, round_half_down(num.u(), na), round_half_down(num.v(), na));
  bottom.subtract(k, top);

  Hnf2 out{{top.vec, bottom.vec}, {top.combo, bottom.combo}, {}};
  out.generator_coords.reserve(m);
  const BaseElement& b = out.basis[1][0];
  const BaseElement& c = out.basis[1][1];
  for (const auto& g : generators) {
    BaseElement y = divide_exact(g[1], c);
    BaseElement x = divide_exact(g[0] - y * b, a);
    out.generator_coords.push_back({std::move(x), std::move(y)});
  }
  return out;
}

}  // namespace cubelaw

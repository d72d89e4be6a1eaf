#pragma once

// Exact arithmetic in the ring of integers O_K of a base field K of narrow
// class number one. Shipped fields are Q and Q(sqrt 2); both are described by
// an integral basis {1, theta} with theta^2 = t*theta + n.

#include "cubelaw/errors.hpp"
#include "cubelaw/integer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubelaw {

enum class FieldKind { Rational, RealQuadratic };

/// Static description of a base field. Instances are singletons; elements
/// refer to them by address, so descriptors are neither copyable nor movable.
class FieldDescriptor {
 public:
  static const FieldDescriptor& rationals();
  static const FieldDescriptor& sqrt2();
  /// "Q" or "Q-sqrt2".
  static const FieldDescriptor& by_name(std::string_view name);

  FieldDescriptor(const FieldDescriptor&) = delete;
  FieldDescriptor& operator=(const FieldDescriptor&) = delete;

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rational; }
  const std::string& name() const { return name_; }
  /// theta^2 = t*theta + n. Both zero for Q.
  const Int& t() const { return t_; }
  const Int& n() const { return n_; }
  /// Discriminant t^2 + 4n of the minimal polynomial of theta.
  Int theta_disc() const { return t_ * t_ + 4 * n_; }
  int real_embeddings() const { return r_; }
  const Int& unit_u() const { return unit_u_; }
  const Int& unit_v() const { return unit_v_; }

 private:
  FieldDescriptor(FieldKind kind, std::string name, Int t, Int n, int r, Int uu, Int uv);

  FieldKind kind_;
  std::string name_;
  Int t_, n_;
  int r_;
  Int unit_u_, unit_v_;
};

/// Signs of an element of K under sigma_1, ..., sigma_r. For Q(sqrt 2) we fix
/// sigma_1(sqrt 2) = +sqrt 2 and sigma_2(sqrt 2) = -sqrt 2.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> signs);
  static SignVector all_positive(int r);

  int size() const { return static_cast<int>(s_.size()); }
  int operator[](int i) const { return s_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& values() const { return s_; }
  bool is_all_positive() const;

  friend SignVector operator*(const SignVector& x, const SignVector& y);
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> s_;
};

/// u + v*theta in O_K. v is always 0 over Q.
class BaseElement {
 public:
  explicit BaseElement(const FieldDescriptor& field, Int u = 0, Int v = 0);
  BaseElement(const FieldDescriptor& field, long u) : BaseElement(field, Int(u)) {}

  static BaseElement fundamental_unit(const FieldDescriptor& field);

  const FieldDescriptor& field() const { return *field_; }
  const Int& u() const { return u_; }
  const Int& v() const { return v_; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_one() const { return u_ == 1 && v_ == 0; }
  bool is_rational_integer() const { return v_ == 0; }

  BaseElement& operator+=(const BaseElement& o);
  BaseElement& operator-=(const BaseElement& o);
  BaseElement& operator*=(const BaseElement& o);

  friend BaseElement operator+(BaseElement x, const BaseElement& y) { return x += y; }
  friend BaseElement operator-(BaseElement x, const BaseElement& y) { return x -= y; }
  friend BaseElement operator*(BaseElement x, const BaseElement& y) { return x *= y; }
  friend BaseElement operator-(const BaseElement& x) {
    return BaseElement(*x.field_, -x.u_, -x.v_);
  }
  friend BaseElement operator*(const Int& k, const BaseElement& x) {
    return BaseElement(*x.field_, k * x.u_, k * x.v_);
  }
  friend bool operator==(const BaseElement& x, const BaseElement& y);

 private:
  void require_same_field(const BaseElement& o, const char* op) const;

  const FieldDescriptor* field_;
  Int u_, v_;
};

BaseElement conj(const BaseElement& x);
Int norm(const BaseElement& x);
Int trace(const BaseElement& x);
/// gcd of the integral-basis coordinates.
Int content(const BaseElement& x);
SignVector sign_vector(const BaseElement& x);
bool is_unit(const BaseElement& x);
bool is_totally_positive(const BaseElement& x);
/// Inverse of a unit; throws InvalidInput for non-units.
BaseElement unit_inverse(const BaseElement& x);
BaseElement power(const BaseElement& x, long e);

/// Unit with the requested sign pattern: first hit in the order
/// 1, -1, eps, -eps where eps is the fundamental unit.
BaseElement unit_with_signs(const FieldDescriptor& field, const SignVector& target);

/// Generator of the totally positive units U+ (1 over Q, (1+sqrt 2)^2 over Q(sqrt 2)).
BaseElement totally_positive_unit_generator(const FieldDescriptor& field);

/// The u in U+ with u^2 = q, when q is the square of a totally positive unit.
std::optional<BaseElement> sqrt_of_totally_positive_unit_square(const BaseElement& q);

/// Exact square root in O_K when one exists (sign chosen with nonnegative
/// leading coordinate).
std::optional<BaseElement> exact_sqrt(const BaseElement& x);

struct DivMod {
  BaseElement quot;
  BaseElement rem;
};

/// x = quot*y + rem with |N(rem)| < |N(y)|. quot rounds each coordinate of
/// x/y to the nearest integer, halves toward zero.
DivMod divmod_euclid(const BaseElement& x, const BaseElement& y);

/// x/y when it lies in O_K.
std::optional<BaseElement> exact_quotient(const BaseElement& x, const BaseElement& y);
bool divides(const BaseElement& d, const BaseElement& x);
BaseElement divide_exact(const BaseElement& x, const BaseElement& y);

/// Totally positive associate with the lexicographically least (|u|, |v|),
/// preferring v >= 0 on ties. Zero maps to zero.
BaseElement canonical_associate(const BaseElement& x);

BaseElement gcd(const BaseElement& x, const BaseElement& y);
BaseElement gcd_all(std::span<const BaseElement> xs);

struct ExtendedGcd {
  BaseElement g;  // canonical associate
  BaseElement s;
  BaseElement t;  // s*x + t*y == g
};
ExtendedGcd xgcd(const BaseElement& x, const BaseElement& y);

/// Witness w with w^2 = d (mod 4 O_K), searched over the residues mod 2 in the
/// order 0, 1, theta, 1 + theta.
std::optional<BaseElement> is_qr_mod4(const BaseElement& d);

inline constexpr std::int64_t kDefaultFactorNormBound = 1'000'000'000;

/// Prime factorisation into canonical associates, sorted by (|norm|, u, v).
/// Units factor as the empty product.
std::vector<BaseElement> factor_element(const BaseElement& x,
                                        const Int& norm_bound = Int(kDefaultFactorNormBound));

/// Pretty form: "3", "-1 - sqrt2", "2*sqrt2".
std::string to_string(const BaseElement& x);

/// Elements of K, stored as (num_u + num_v*theta)/den with den > 0 and the
/// content of num coprime to den.
class BaseRational {
 public:
  BaseRational(BaseElement num, Int den = 1);  // NOLINT(google-explicit-constructor)
  BaseRational(const FieldDescriptor& field, long value) : BaseRational(BaseElement(field, value)) {}

  const BaseElement& num() const { return num_; }
  const Int& den() const { return den_; }
  const FieldDescriptor& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  /// Throws NonIntegralEntry when den != 1.
  const BaseElement& integral() const;
  BaseRational inverse() const;

  friend BaseRational operator+(const BaseRational& x, const BaseRational& y);
  friend BaseRational operator-(const BaseRational& x, const BaseRational& y);
  friend BaseRational operator*(const BaseRational& x, const BaseRational& y);
  friend BaseRational operator/(const BaseRational& x, const BaseRational& y);
  friend BaseRational operator-(const BaseRational& x) { return BaseRational(-x.num_, x.den_); }
  friend bool operator==(const BaseRational& x, const BaseRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  BaseElement num_;
  Int den_;
};

SignVector sign_vector(const BaseRational& x);
BaseRational conj(const BaseRational& x);
BaseRational canonical_associate(const BaseRational& x);
std::string to_string(const BaseRational& x);

/// 2x2 matrix over O_K acting on pairs as (x, y) -> (p x + q y, r x + s y).
struct Mat2 {
  BaseElement p, q, r, s;

  static Mat2 identity(const FieldDescriptor& field);
  BaseElement det() const { return p * s - q * r; }
  /// Inverse when det is a unit.
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using Coords = std::array<BaseElement, 2>;

/// Canonical triangular basis of a rank-2 O_K-submodule of O_K^2 together with
/// a certificate that it spans the same module as the input generators.
struct Hnf2 {
  /// basis[0] = (a, 0), basis[1] = (b, c); a and c canonical associates, b
  /// reduced modulo a.
  std::array<Coords, 2> basis;
  /// basis[i] = sum_j from_generators[i][j] * generators[j].
  std::array<std::vector<BaseElement>, 2> from_generators;
  /// generators[j] = generator_coords[j][0]*basis[0] + generator_coords[j][1]*basis[1].
  std::vector<Coords> generator_coords;
};

Hnf2 hnf_rank2(std::span<const Coords> generators);

}  // namespace cubelaw

#pragma once

// L = K(sqrt D) with O_L = O_K[Omega], Omega^2 + w*Omega + z = 0, D = w^2 - 4z.

#include "cubelaw/base_field.hpp"

#include <memory>
#include <string>

namespace cubelaw {

class Extension;
using ExtensionPtr = std::shared_ptr<const Extension>;

class Extension {
 public:
  /// Validates that D is fundamental and non-square, then fixes w as the
  /// canonical mod-4 witness and z = (w^2 - D)/4.
  static ExtensionPtr make(const BaseElement& d);

  const FieldDescriptor& base() const { return *base_; }
  const BaseElement& d() const { return d_; }
  const BaseElement& w() const { return w_; }
  const BaseElement& z() const { return z_; }

  /// The totally positive unit u with u^2 * D == disc, if one exists.
  std::optional<BaseElement> disc_ratio_root(const BaseElement& disc) const;

 private:
  struct Token {};

 public:
  Extension(Token, BaseElement d, BaseElement w, BaseElement z);

 private:
  const FieldDescriptor* base_;
  BaseElement d_, w_, z_;
};

bool is_fundamental(const BaseElement& d);

/// (x + y*Omega)/den with x, y in O_K and one shared positive denominator.
class ExtElement {
 public:
  ExtElement(ExtensionPtr ext, BaseElement x, BaseElement y, Int den = 1);
  ExtElement(ExtensionPtr ext, const BaseRational& x, const BaseRational& y);
  static ExtElement scalar(ExtensionPtr ext, const BaseRational& x);
  static ExtElement omega(ExtensionPtr ext);

  const ExtensionPtr& ext() const { return ext_; }
  const FieldDescriptor& base() const { return ext_->base(); }
  const BaseElement& x_num() const { return x_; }
  const BaseElement& y_num() const { return y_; }
  const Int& den() const { return den_; }
  BaseRational x() const { return BaseRational(x_, den_); }
  BaseRational y() const { return BaseRational(y_, den_); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  bool in_base() const { return y_.is_zero(); }

  ExtElement inverse() const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) { return a * b.inverse(); }
  friend ExtElement operator-(const ExtElement& a) { return ExtElement(a.ext_, -a.x_, -a.y_, a.den_); }
  friend ExtElement operator*(const BaseRational& k, const ExtElement& a);
  friend ExtElement operator*(const BaseElement& k, const ExtElement& a) { return BaseRational(k) * a; }
  friend bool operator==(const ExtElement& a, const ExtElement& b);

 private:
  void require_same(const ExtElement& o) const;

  ExtensionPtr ext_;
  BaseElement x_, y_;
  Int den_;
};

ExtElement conj(const ExtElement& a);
/// Omega-coordinate: (a - conj a)/(Omega - conj Omega).
BaseRational tau(const ExtElement& a);
BaseRational rel_norm(const ExtElement& a);
BaseRational rel_trace(const ExtElement& a);
/// w + 2*Omega, whose square is D.
ExtElement sqrt_d(const ExtensionPtr& ext);
/// u * sqrt_d with u totally positive and u^2 D == disc; DiscOutsideOrbit otherwise.
ExtElement sqrt_disc(const ExtensionPtr& ext, const BaseElement& disc);

std::string to_string(const ExtElement& a);

}  // namespace cubelaw

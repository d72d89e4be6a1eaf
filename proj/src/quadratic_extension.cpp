#include "cubelaw/quadratic_extension.hpp"

#include <utility>

namespace cubelaw {

Extension::Extension(Token, BaseElement d, BaseElement w, BaseElement z)
    : base_(&d.field()), d_(std::move(d)), w_(std::move(w)), z_(std::move(z)) {}

ExtensionPtr Extension::make(const BaseElement& d) {
  if (d.is_zero()) throw ZeroInput("discriminant must be nonzero");
  if (exact_sqrt(d)) throw NotFundamental(to_string(d) + " is a square in O_K");
  if (!is_fundamental(d)) throw NotFundamental(to_string(d) + " is not fundamental");
  BaseElement w = *is_qr_mod4(d);
  BaseElement four(d.field(), 4);
  BaseElement z = divide_exact(w * w - d, four);
  return std::make_shared<const Extension>(Token{}, d, std::move(w), std::move(z));
}

std::optional<BaseElement> Extension::disc_ratio_root(const BaseElement& disc) const {
  if (&disc.field() != base_) throw DescriptorMismatch("discriminant over a different base field");
  auto q = exact_quotient(disc, d_);
  if (!q) return std::nullopt;
  return sqrt_of_totally_positive_unit_square(*q);
}

bool is_fundamental(const BaseElement& d) {
  if (!is_qr_mod4(d)) return false;
  const auto& f = d.field();
  std::vector<BaseElement> primes = factor_element(d);
  BaseElement two(f, 2);
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    if (!(primes[i] == primes[i + 1])) continue;
    const BaseElement& p = primes[i];
    if (!divides(p, two)) return false;
    if (is_qr_mod4(divide_exact(d, p * p))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- ExtElement

ExtElement::ExtElement(ExtensionPtr ext, BaseElement x, BaseElement y, Int den)
    : ext_(std::move(ext)), x_(std::move(x)), y_(std::move(y)), den_(std::move(den)) {
  if (&x_.field() != &ext_->base() || &y_.field() != &ext_->base()) {
    throw DescriptorMismatch("coordinates over a different base field");
  }
  if (den_ == 0) throw DivisionByZero("zero denominator");
  if (den_ < 0) {
    x_ = -x_;
    y_ = -y_;
    den_ = -den_;
  }
  if (x_.is_zero() && y_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g;
  Int cx = content(x_);
  Int cy = content(y_);
  mpz_gcd(g.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    x_ = BaseElement(x_.field(), Int(x_.u() / g), Int(x_.v() / g));
    y_ = BaseElement(y_.field(), Int(y_.u() / g), Int(y_.v() / g));
    den_ /= g;
  }
}

ExtElement::ExtElement(ExtensionPtr ext, const BaseRational& x, const BaseRational& y)
    : ExtElement(ext, y.den() * x.num(), x.den() * y.num(), x.den() * y.den()) {}

ExtElement ExtElement::scalar(ExtensionPtr ext, const BaseRational& x) {
  BaseElement zero(ext->base(), 0);
  return ExtElement(std::move(ext), x.num(), zero, x.den());
}

ExtElement ExtElement::omega(ExtensionPtr ext) {
  const auto& f = ext->base();
  return ExtElement(std::move(ext), BaseElement(f, 0), BaseElement(f, 1));
}

void ExtElement::require_same(const ExtElement& o) const {
  if (ext_ != o.ext_ && !(ext_->d() == o.ext_->d())) {
    throw DescriptorMismatch("elements of different quadratic extensions");
  }
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  return (a.ext_ == b.ext_ || a.ext_->d() == b.ext_->d()) && a.x_ == b.x_ && a.y_ == b.y_ &&
         a.den_ == b.den_;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  a.require_same(b);
  return ExtElement(a.ext_, b.den_ * a.x_ + a.den_ * b.x_, b.den_ * a.y_ + a.den_ * b.y_,
                    a.den_ * b.den_);
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  a.require_same(b);
  return ExtElement(a.ext_, b.den_ * a.x_ - a.den_ * b.x_, b.den_ * a.y_ - a.den_ * b.y_,
                    a.den_ * b.den_);
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  a.require_same(b);
  const Extension& e = *a.ext_;
  BaseElement yy = a.y_ * b.y_;
  BaseElement x = a.x_ * b.x_ - e.z() * yy;
  BaseElement y = a.x_ * b.y_ + a.y_ * b.x_ - e.w() * yy;
  return ExtElement(a.ext_, std::move(x), std::move(y), a.den_ * b.den_);
}

ExtElement operator*(const BaseRational& k, const ExtElement& a) {
  return ExtElement(a.ext_, k.num() * a.x_, k.num() * a.y_, k.den() * a.den_);
}

ExtElement ExtElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in L");
  return rel_norm(*this).inverse() * conj(*this);
}

ExtElement conj(const ExtElement& a) {
  const Extension& e = *a.ext();
  return ExtElement(a.ext(), a.x_num() - e.w() * a.y_num(), -a.y_num(), a.den());
}

BaseRational tau(const ExtElement& a) { return a.y(); }

BaseRational rel_norm(const ExtElement& a) {
  const Extension& e = *a.ext();
  const BaseElement& x = a.x_num();
  const BaseElement& y = a.y_num();
  return BaseRational(x * x - e.w() * x * y + e.z() * y * y, a.den() * a.den());
}

BaseRational rel_trace(const ExtElement& a) {
  return BaseRational(BaseElement(a.base(), 2) * a.x_num() - a.ext()->w() * a.y_num(), a.den());
}

ExtElement sqrt_d(const ExtensionPtr& ext) {
  return ExtElement(ext, ext->w(), BaseElement(ext->base(), 2));
}

ExtElement sqrt_disc(const ExtensionPtr& ext, const BaseElement& disc) {
  auto u = ext->disc_ratio_root(disc);
  if (!u) {
    throw DiscOutsideOrbit(to_string(disc) + " is not u^2 * " + to_string(ext->d()) +
                           " for a totally positive unit u");
  }
  return *u * sqrt_d(ext);
}

std::string to_string(const ExtElement& a) {
  std::string s;
  if (a.y_num().is_zero()) {
    s = to_string(a.x_num());
  } else {
    std::string yv = to_string(a.y_num());
    bool compound = a.y_num().u() != 0 && a.y_num().v() != 0;
    std::string yterm;
    if (yv == "1") {
      yterm = "Omega";
    } else if (yv == "-1") {
      yterm = "-Omega";
    } else {
      yterm = (compound ? "(" + yv + ")" : yv) + "*Omega";
    }
    if (a.x_num().is_zero()) {
      s = yterm;
    } else if (yterm.front() == '-') {
      s = to_string(a.x_num()) + " - " + yterm.substr(1);
    } else {
      s = to_string(a.x_num()) + " + " + yterm;
    }
  }
  if (a.den() != 1) s = "(" + s + ")/" + to_decimal(a.den());
  return s;
}

}  // namespace cubelaw

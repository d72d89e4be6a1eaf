#include "cubelaw/integer.hpp"

#include "cubelaw/errors.hpp"

#include <string>

namespace cubelaw {

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("floor_div by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace {

// Splits num/den (den > 0 after normalisation) into floor and twice the remainder.
void floor_and_twice_frac(const Int& num, const Int& den, Int& q, Int& twice_r, Int& d) {
  if (den == 0) throw DivisionByZero("rounding by zero");
  Int n = num;
  d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  twice_r = 2 * r;
}

}  // namespace

Int round_ties_to_zero(const Int& num, const Int& den) {
  Int q, twice_r, d;
  floor_and_twice_frac(num, den, q, twice_r, d);
  int c = cmp(twice_r, d);
  if (c > 0) return q + 1;
  if (c < 0) return q;
  return q >= 0 ? q : Int(q + 1);
}

Int round_half_down(const Int& num, const Int& den) {
  Int q, twice_r, d;
  floor_and_twice_frac(num, den, q, twice_r, d);
  return cmp(twice_r, d) > 0 ? Int(q + 1) : q;
}

Int isqrt(const Int& n) {
  if (n < 0) throw InvalidInput("isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Int out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
  }
  return out;
}

std::string to_decimal(const Int& x) { return x.get_str(10); }

}  // namespace cubelaw

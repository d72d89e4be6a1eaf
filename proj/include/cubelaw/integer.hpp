#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubelaw {

using Int = mpz_class;

Int floor_div(const Int& num, const Int& den);

/// Nearest integer to num/den; exact halves go toward zero (5/2 -> 2, -5/2 -> -2).
Int round_ties_to_zero(const Int& num, const Int& den);

/// Nearest integer to num/den; exact halves go down. Unlike round_ties_to_zero
/// this commutes with integer translation, so residues it produces are canonical.
Int round_half_down(const Int& num, const Int& den);

Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);
Int abs_int(const Int& x);

Int parse_int(std::string_view text);
std::string to_decimal(const Int& x);

}  // namespace cubelaw

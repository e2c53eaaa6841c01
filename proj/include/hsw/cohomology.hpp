#pragma once

// Cohomology of a free abelian group Z^r acting on V through a character, and
// the unit criterion for real quadratic fields.

#include <array>
#include <vector>

#include <boost/rational.hpp>

#include "hsw/character_lattice.hpp"

namespace hsw {

using Rational = boost::rational<long long>;

bool unit_action_trivial(std::span<const Int> exponents);

Int binomial(Int n, Int k);

/// dimV * C(r, s) when the action is trivial and 0 <= s <= r, else 0.
Int free_abelian_cohomology_dim(Int r, Int s, bool trivial, Int dimV);

/// Dimensions of H^0..H^r computed by exact rank computation on the Koszul
/// complex of Z^r, where generator i acts on V by the scalar char_values[i].
std::vector<Int> koszul_oracle(int r, const std::vector<Rational>& char_values, Int dimV);

/// Fundamental unit (a + b sqrt(m)) / den of Q(sqrt(m)), found from the
/// smallest solution of the norm equation.
struct QuadraticUnit {
  Int a = 0;
  Int b = 0;
  Int den = 1;
  double value() const;      // image under the embedding sqrt(m) > 0
  double conjugate() const;  // image under the other embedding
  Int m = 0;
};

QuadraticUnit fundamental_unit(Int m);

/// |s1(u)|^n1 * |s2(u)|^n2 == 1 within 1e-9 for the fundamental unit u.
bool quadratic_unit_check(Int m, std::array<Int, 2> exponents);

}  // namespace hsw

#include "hsw/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "hsw/error.hpp"

namespace hsw {

bool unit_action_trivial(std::span<const Int> exponents) {
  if (exponents.empty()) throw Error(ErrorKind::InvalidArgument, "empty exponent list");
  return parallel_value(exponents).has_value();
}

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Int free_abelian_cohomology_dim(Int r, Int s, bool trivial, Int dimV) {
  if (r < 0 || dimV < 1) throw Error(ErrorKind::InvalidArgument, "need r >= 0 and dimV >= 1");
  if (!trivial || s < 0 || s > r) return 0;
  return dimV * binomial(r, s);
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Int rank(Matrix a) {
  Int rk = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rk) < rows; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rk);
    while (pivot < rows && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rk)]);
    const auto& prow = a[static_cast<std::size_t>(rk)];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rk) || a[i][col].numerator() == 0) continue;
      Rational f = a[i][col] / prow[col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * prow[j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

std::vector<Int> koszul_oracle(int r, const std::vector<Rational>& char_values, Int dimV) {
  if (r < 0 || r > 4) throw Error(ErrorKind::SizeLimit, "koszul_oracle supports r <= 4, got " + std::to_string(r));
  if (static_cast<int>(char_values.size()) != r)
    throw Error(ErrorKind::LengthMismatch, "need one character value per generator");
  if (dimV < 1) throw Error(ErrorKind::InvalidArgument, "dimV must be positive");

  // basis of C^s: subsets S of {0..r-1} of size s, tensored with V
  std::vector<std::vector<unsigned>> subsets(static_cast<std::size_t>(r) + 1);
  for (unsigned S = 0; S < (1U << r); ++S) subsets[static_cast<std::size_t>(__builtin_popcount(S))].push_back(S);
  auto index_of = [&](int s, unsigned S) {
    const auto& v = subsets[static_cast<std::size_t>(s)];
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), S) - v.begin());
  };
  const auto dv = static_cast<std::size_t>(dimV);

  // d^s : C^s -> C^{s+1}, e_S -> sum_{i not in S} sign * (chi_i - 1) e_{S+i}
  std::vector<Int> ranks(static_cast<std::size_t>(r) + 1, 0);
  for (int s = 0; s < r; ++s) {
    const auto& src = subsets[static_cast<std::size_t>(s)];
    const auto& dst = subsets[static_cast<std::size_t>(s) + 1];
    Matrix m(dst.size() * dv, std::vector<Rational>(src.size() * dv, Rational(0)));
    for (std::size_t col = 0; col < src.size(); ++col) {
      const unsigned S = src[col];
      for (int i = 0; i < r; ++i) {
        if (S & (1U << i)) continue;
        const int before = __builtin_popcount(S & ((1U << i) - 1U));
        const Rational coef = (before % 2 ? Rational(-1) : Rational(1)) * (char_values[static_cast<std::size_t>(i)] - 1);
        const std::size_t row = index_of(s + 1, S | (1U << i));
        for (std::size_t v = 0; v < dv; ++v) m[row * dv + v][col * dv + v] = coef;
      }
    }
    ranks[static_cast<std::size_t>(s)] = rank(std::move(m));
  }

  std::vector<Int> out;
  for (int s = 0; s <= r; ++s) {
    const Int dim = static_cast<Int>(subsets[static_cast<std::size_t>(s)].size()) * dimV;
    const Int in = s > 0 ? ranks[static_cast<std::size_t>(s) - 1] : 0;
    out.push_back(dim - ranks[static_cast<std::size_t>(s)] - in);
  }
  return out;
}

double QuadraticUnit::value() const {
  return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(m))) /
         static_cast<double>(den);
}

double QuadraticUnit::conjugate() const {
  return (static_cast<double>(a) - static_cast<double>(b) * std::sqrt(static_cast<double>(m))) /
         static_cast<double>(den);
}

namespace {

constexpr Int kUnitSearchBound = 1'000'000;

bool squarefree(Int m) {
  for (Int p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<Int>(std::llround(std::sqrt(static_cast<long double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

QuadraticUnit fundamental_unit(Int m) {
  if (m <= 1 || !squarefree(m))
    throw Error(ErrorKind::UnsupportedField, "m=" + std::to_string(m) + " is not a squarefree integer > 1");
  // ring of integers is Z[(1+sqrt m)/2] when m = 1 mod 4, else Z[sqrt m]
  const Int norm = (m % 4 == 1) ? 4 : 1;
  const Int den = (m % 4 == 1) ? 2 : 1;
  for (Int b = 1; b <= kUnitSearchBound; ++b) {
    const Int mb2 = m * b * b;
    for (Int sign : {-1, 1}) {
      if (auto a = exact_sqrt(mb2 + sign * norm); a && *a > 0) return {*a, b, den, m};
    }
  }
  throw Error(ErrorKind::UnsupportedField, "no fundamental unit found for m=" + std::to_string(m));
}

bool quadratic_unit_check(Int m, std::array<Int, 2> exponents) {
  const QuadraticUnit u = fundamental_unit(m);
  const double log_norm = static_cast<double>(exponents[0]) * std::log(std::fabs(u.value())) +
                          static_cast<double>(exponents[1]) * std::log(std::fabs(u.conjugate()));
  return std::fabs(std::exp(log_norm) - 1.0) < 1e-9;
}

}  // namespace hsw

#pragma once

// Weyl group of G_L: a product of d copies of the order-8 Weyl group of C2,
// each acting on the coordinate pair (a, b) of one embedding by a signed
// permutation. Elements are stored as 2x2 integer matrices per embedding.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsw/character_lattice.hpp"

namespace hsw {

struct Vec2 {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Signed permutation matrix [[m00, m01], [m10, m11]] acting on column vectors.
struct C2Element {
  std::array<Int, 4> m{1, 0, 0, 1};

  static C2Element identity() { return {}; }
  Vec2 apply(Vec2 v) const { return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b}; }
  C2Element inverse() const { return {{m[0], m[2], m[1], m[3]}}; }  // orthogonal

  /// (*this) * rhs, i.e. apply rhs first.
  C2Element operator*(const C2Element& rhs) const;

  /// Human-readable image of (a, b), e.g. "(-b,a)".
  std::string describe() const;

  friend bool operator==(const C2Element&, const C2Element&) = default;
  friend auto operator<=>(const C2Element&, const C2Element&) = default;
};

/// Positive roots of one C2 copy: rho1 = (1,-1), rho2 = (0,2), (1,1), (2,0).
inline constexpr std::array<Vec2, 4> kPositiveRoots{{{1, -1}, {0, 2}, {1, 1}, {2, 0}}};
inline constexpr Vec2 kRho{2, 1};

bool is_positive_root(Vec2 v);

/// Orthogonal reflection in the root alpha: v - 2 (v.alpha)/(alpha.alpha) alpha.
C2Element reflection(Vec2 alpha);

/// The 8 elements of one C2 copy in a fixed order (sorted by matrix entries).
const std::vector<C2Element>& c2_elements();

/// Inversion set and length of a single factor.
std::vector<Vec2> factor_inversion_set(const C2Element& w);
int factor_length(const C2Element& w);

struct Root {
  int embedding = 0;
  Vec2 coords;
  bool positive() const { return is_positive_root(coords); }
  friend bool operator==(const Root&, const Root&) = default;
};

class WeylElement {
 public:
  explicit WeylElement(std::vector<C2Element> factors);

  int d() const { return static_cast<int>(factors_.size()); }
  const std::vector<C2Element>& factors() const { return factors_; }
  const C2Element& factor(int s) const { return factors_[static_cast<std::size_t>(s)]; }
  int length() const { return length_; }
  int factor_length(int s) const;

  /// r+(w) = { alpha positive : w^-1 alpha negative }.
  std::vector<Root> inversion_set() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<C2Element> factors_;
  int length_ = 0;
};

enum class Stratum { Siegel = 0, Klingen = 1 };

std::string_view to_string(Stratum m);

/// r_{W_m} for one embedding: Siegel {(0,2),(1,1),(2,0)}, Klingen {(1,-1),(1,1),(2,0)}.
std::vector<Vec2> unipotent_roots(Stratum m);

inline constexpr std::uint64_t kDefaultWeylCap = 1ULL << 24;

/// All 8^d elements, lexicographic in the per-factor order of c2_elements().
std::vector<WeylElement> enumerate_weyl(int d, std::uint64_t cap = kDefaultWeylCap);

/// Elements whose inversion set lies in r_{W_m}, filtered from enumerate_weyl.
std::vector<WeylElement> kostant_set(int d, Stratum m, std::uint64_t cap = kDefaultWeylCap);

/// Coordinates of a character of the torus (or of a Levi): (e1[s], e2[s])_s and c.
struct CharacterCoords {
  std::vector<Int> e1;
  std::vector<Int> e2;
  Int c = 0;
  friend bool operator==(const CharacterCoords&, const CharacterCoords&) = default;
};

/// w(lambda + rho) - rho, with c unchanged.
CharacterCoords dot_action(const WeylElement& w, const HighestWeight& lambda);

/// Affine form x*k1 + y*k2 + z describing one coordinate of the dot action of a
/// single factor, as a function of (k1, k2).
struct AffineForm {
  Int x = 0;
  Int y = 0;
  Int z = 0;
  std::string to_string() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

std::array<AffineForm, 2> symbolic_dot_action(const C2Element& w);

}  // namespace hsw

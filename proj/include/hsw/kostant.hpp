#pragma once

// Kostant summands along the two boundary stratum types. A decomposition
// assigns each embedding a level in {0,1,2,3}; level i means membership in I^i.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsw/character_lattice.hpp"
#include "hsw/weyl.hpp"

namespace hsw {

class KostantDecomposition {
 public:
  explicit KostantDecomposition(std::vector<int> levels);

  /// Every embedding in the given part.
  static KostantDecomposition uniform(int d, int level);

  int d() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const { return levels_; }
  int level(int s) const { return levels_[static_cast<std::size_t>(s)]; }
  EmbeddingSet part(int i) const;
  int q() const;

  std::string to_string() const;  // e.g. "0312"

  friend bool operator==(const KostantDecomposition&, const KostantDecomposition&) = default;
  friend auto operator<=>(const KostantDecomposition&, const KostantDecomposition&) = default;

 private:
  std::vector<int> levels_;
};

/// All decompositions of total level q, lexicographic in the level word.
std::vector<KostantDecomposition> decompositions(int d, int q);

/// Level of embedding s = length of the s-th factor of w.
KostantDecomposition decomposition_of(const WeylElement& w);

struct LeviCharacter {
  CharacterCoords coords;
  Stratum stratum = Stratum::Siegel;
  KostantDecomposition psi{std::vector<int>{}};
  Int hodge_weight = 0;

  /// -c - sum(e1+e2) for Siegel, -c - sum(e1) for Klingen.
  Int pairing_weight() const;
};

LeviCharacter levi_weight(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m);

Int hodge_weight(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m);

/// The kappa making lambda (kappa, m)-Kostant parallel with respect to psi.
std::optional<Int> parallel_condition(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m);

std::vector<std::pair<KostantDecomposition, Int>> admissible_decompositions(const HighestWeight& lambda, int q,
                                                                            Stratum m);

}  // namespace hsw

#pragma once

// Degree-by-degree degeneration profiles of the boundary at Siegel strata,
// Klingen strata, Hilbert-Blumenthal cusps, and the double degeneration.

#include <optional>
#include <string_view>
#include <vector>

#include "hsw/character_lattice.hpp"
#include "hsw/kostant.hpp"

namespace hsw {

enum class SummandStatus { Zero, Nonzero, NonzeroIfParity, MayBeNonzero, Undetermined };

std::string_view to_string(SummandStatus s);

/// Nonzero, NonzeroIfParity or MayBeNonzero.
bool possibly_nonzero(SummandStatus s);

struct Summand {
  std::optional<KostantDecomposition> psi;
  Int p = 0;
  Int q = 0;
  Int weight = 0;
  SummandStatus status = SummandStatus::Zero;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct ProfileEntry {
  Int n = 0;
  SummandStatus status = SummandStatus::Zero;  // strongest summand status
  std::vector<Summand> summands;
};

/// Entry of degree n, or a ZERO entry when n is not listed.
ProfileEntry entry_at(const std::vector<ProfileEntry>& profile, Int n);

/// Degrees 0..6d-2; degrees outside are zero.
std::vector<ProfileEntry> siegel_profile(const HighestWeight& lambda);

/// Degrees 0..4d-1; degrees outside are zero.
std::vector<ProfileEntry> klingen_profile(const HighestWeight& lambda);

struct CuspCharacter {
  std::vector<Int> h;
  Int g = 0;
  friend bool operator==(const CuspCharacter&, const CuspCharacter&) = default;
};

CuspCharacter cusp_restriction(const HighestWeight& lambda);

/// Levi character of a Klingen summand restricted to a Hilbert-Blumenthal
/// cusp: h = e2, g = (c + sum(e1 + e2)) / 2.
CuspCharacter cusp_restriction(const CharacterCoords& levi);

struct CuspSummand {
  EmbeddingSet subset;
  Int weight = 0;
};

/// H^q(W_2, U_chi) split over subsets I with |I| = q.
std::vector<CuspSummand> cusp_raw_decomposition(const CuspCharacter& chi, int q);

/// Degrees 0..2d-1.
std::vector<ProfileEntry> hb_cusp_profile(const CuspCharacter& chi, int d);

/// Degrees m' in 0..2d-1 of the degeneration at cusps of the Klingen summands
/// living in classical degrees [2d, 3d-1].
std::vector<ProfileEntry> double_degeneration_profile(const HighestWeight& lambda);

/// Perverse-degree profile of a stratum: entry n is the perverse degree and
/// summand weights are perverse weights.
std::vector<ProfileEntry> perverse_profile(const HighestWeight& lambda, Stratum m);

enum class Condition { Always, IfParity };

std::string_view to_string(Condition c);

struct AttainedBound {
  Int n = 0;
  Int weight = 0;
  Condition condition = Condition::Always;
  friend bool operator==(const AttainedBound&, const AttainedBound&) = default;
  friend auto operator<=>(const AttainedBound&, const AttainedBound&) = default;
};

struct PerverseBoundSet {
  Stratum stratum = Stratum::Siegel;
  bool applicable = false;
  Int range_lo = 0;
  Int range_hi = 0;
  Int beta = 0;  // perverse weights in degree n are <= n - beta
  std::vector<AttainedBound> attained;
};

PerverseBoundSet perverse_bounds(const HighestWeight& lambda, Stratum m);

}  // namespace hsw

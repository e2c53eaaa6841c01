#pragma once

#include <optional>
#include <vector>

#include "hsw/character_lattice.hpp"
#include "hsw/profiles.hpp"

namespace hsw {

struct AppearingWeight {
  Int w = 0;
  Condition condition = Condition::Always;
  friend bool operator==(const AppearingWeight&, const AppearingWeight&) = default;
  friend auto operator<=>(const AppearingWeight&, const AppearingWeight&) = default;
};

/// Weights lo..hi are avoided. Only meaningful when the boundary is non-zero;
/// a zero boundary avoids everything.
struct WeightInterval {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const WeightInterval&, const WeightInterval&) = default;
};

struct AvoidanceReport {
  HighestWeight lambda;
  int corank = 0;
  bool completely_irregular = false;
  std::vector<ParallelPresentation> presentations;
  bool boundary_zero = false;
  std::optional<WeightInterval> avoided_interval;  // unset: none, or everything if boundary_zero
  std::vector<AppearingWeight> appearing_weights;   // sorted, no duplicates
  bool weights01_present = false;
  bool intersection_motive_exists = true;
  bool multi_presentation = false;

  /// The beta of the avoided interval (-beta+1, beta), if there is one.
  std::optional<Int> beta() const;

  friend bool operator==(const AvoidanceReport&, const AvoidanceReport&) = default;
};

AvoidanceReport closed_form_avoidance(const HighestWeight& lambda);

AvoidanceReport profile_avoidance(const HighestWeight& lambda);

/// Does the boundary motive avoid weights -beta+1, ..., beta? Throws InvalidBeta for beta < 1.
bool check_avoids(const HighestWeight& lambda, Int beta);

bool weights01_present(const HighestWeight& lambda);

}  // namespace hsw

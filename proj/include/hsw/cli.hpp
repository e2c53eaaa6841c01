#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsw/avoidance.hpp"
#include "hsw/json_io.hpp"

namespace hsw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr std::uint64_t kDefaultSweepCap = 1'000'000;

struct SweepSpec {
  int d = 1;
  Int k_max = 0;
  std::uint64_t cap = kDefaultSweepCap;
  unsigned workers = 1;
};

struct SweepRow {
  std::vector<Int> k1;
  std::vector<Int> k2;
  int corank = 0;
  bool completely_irregular = false;
  bool kostant_parallel = false;
  std::string beta;  // number, "ZERO" (boundary vanishes) or "NONE" (no avoided interval)
  bool weights01_present = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Raised when the two avoidance computations disagree.
struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// profile_avoidance, checked against closed_form_avoidance.
AvoidanceReport classify(const HighestWeight& lambda);

SweepRow row_from_report(const AvoidanceReport& r);

/// All dominant weights with entries <= k_max, sorted by (k1, k2).
std::vector<HighestWeight> sweep_weights(const SweepSpec& spec);

std::vector<SweepRow> sweep(const SweepSpec& spec);

std::string to_csv(const std::vector<SweepRow>& rows);
Json to_json(const std::vector<SweepRow>& rows);

/// Entry point shared by the hsw binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsw::cli

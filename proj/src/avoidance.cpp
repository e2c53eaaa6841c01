#include "hsw/avoidance.hpp"

#include <algorithm>

#include "hsw/error.hpp"

namespace hsw {

std::optional<Int> AvoidanceReport::beta() const {
  if (!avoided_interval) return std::nullopt;
  return avoided_interval->hi;
}

namespace {

AvoidanceReport base_report(const HighestWeight& lambda) {
  const auto cls = classify_weight(lambda);
  AvoidanceReport r{lambda, 0, false, {}, false, std::nullopt, {}, false, true, false};
  r.corank = cls.corank;
  r.completely_irregular = cls.completely_irregular;
  r.presentations = kostant_parallel_presentations(lambda);
  r.multi_presentation = r.presentations.size() > 1;
  return r;
}

void add_pair(AvoidanceReport& r, Int beta, Condition c) {
  r.appearing_weights.push_back({-beta, c});
  r.appearing_weights.push_back({beta + 1, c});
}

// 0 and 1 count as present when asserted outright, or asserted under a
// parity condition that lambda satisfies.
bool certified(const AvoidanceReport& r, const HighestWeight& lambda, Int w) {
  for (const auto& a : r.appearing_weights) {
    if (a.w != w) continue;
    if (a.condition == Condition::Always) return true;
    auto k1 = parallel_value(lambda.k1());
    auto k2 = parallel_value(lambda.k2());
    if (k1 && k2 && (*k1 - *k2) % 2 == 0) return true;
  }
  return false;
}

void finish(AvoidanceReport& r, std::optional<Int> beta) {
  auto& aw = r.appearing_weights;
  std::sort(aw.begin(), aw.end());
  aw.erase(std::unique(aw.begin(), aw.end()), aw.end());
  if (r.boundary_zero) {
    aw.clear();
    r.avoided_interval.reset();
  } else if (beta && *beta >= 1) {
    r.avoided_interval = WeightInterval{-*beta + 1, *beta};
  }
  r.weights01_present = !r.boundary_zero && !r.avoided_interval && certified(r, r.lambda, 0) &&
                        certified(r, r.lambda, 1);
  r.intersection_motive_exists = !r.weights01_present;
}

}  // namespace

AvoidanceReport closed_form_avoidance(const HighestWeight& lambda) {
  AvoidanceReport r = base_report(lambda);
  const Int d = lambda.d();
  std::optional<Int> beta;

  if (r.presentations.empty()) {
    r.boundary_zero = true;
  } else if (r.corank == 0) {
    const auto best = std::min_element(r.presentations.begin(), r.presentations.end(),
                                       [](const auto& a, const auto& b) {
                                         return a.d1() != b.d1() ? a.d1() < b.d1() : a.kappa < b.kappa;
                                       });
    beta = best->d1() + d * best->kappa;
    add_pair(r, *beta, Condition::Always);
  } else {
    const Int k2 = lambda.k2(0);
    if (auto k1 = parallel_value(lambda.k1())) {
      beta = d * std::min(*k1 - k2, k2);
      add_pair(r, d * k2, Condition::Always);
      add_pair(r, d * (*k1 - k2), Condition::IfParity);
    } else {
      beta = d * k2;
      add_pair(r, *beta, Condition::Always);
    }
  }
  finish(r, beta);
  return r;
}

AvoidanceReport profile_avoidance(const HighestWeight& lambda) {
  AvoidanceReport r = base_report(lambda);
  std::optional<Int> beta;
  for (Stratum m : {Stratum::Siegel, Stratum::Klingen}) {
    const auto b = perverse_bounds(lambda, m);
    if (!b.applicable) continue;
    beta = std::min(beta.value_or(b.beta), b.beta);
    for (const auto& a : b.attained) add_pair(r, a.n - a.weight, a.condition);
  }
  r.boundary_zero = !beta.has_value();
  finish(r, beta);
  return r;
}

bool check_avoids(const HighestWeight& lambda, Int beta) {
  if (beta < 1) throw Error(ErrorKind::InvalidBeta, "beta must be >= 1, got " + std::to_string(beta));
  for (Stratum m : {Stratum::Siegel, Stratum::Klingen}) {
    const auto b = perverse_bounds(lambda, m);
    if (b.applicable && b.beta < beta) return false;
  }
  return true;
}

bool weights01_present(const HighestWeight& lambda) { return profile_avoidance(lambda).weights01_present; }

}  // namespace hsw

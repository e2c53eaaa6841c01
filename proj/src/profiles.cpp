#include "hsw/profiles.hpp"

#include <algorithm>
#include <set>

#include "hsw/error.hpp"

namespace hsw {

std::string_view to_string(SummandStatus s) {
  switch (s) {
    case SummandStatus::Zero: return "ZERO";
    case SummandStatus::Nonzero: return "NONZERO";
    case SummandStatus::NonzeroIfParity: return "NONZERO_IF_PARITY";
    case SummandStatus::MayBeNonzero: return "MAY_BE_NONZERO";
    case SummandStatus::Undetermined: return "NOT_DETERMINED_BY_PAPER";
  }
  return "ZERO";
}

std::string_view to_string(Condition c) { return c == Condition::Always ? "ALWAYS" : "IF_PARITY"; }

bool possibly_nonzero(SummandStatus s) {
  return s == SummandStatus::Nonzero || s == SummandStatus::NonzeroIfParity || s == SummandStatus::MayBeNonzero;
}

namespace {

int strength(SummandStatus s) {
  switch (s) {
    case SummandStatus::Nonzero: return 3;
    case SummandStatus::NonzeroIfParity: return 2;
    case SummandStatus::MayBeNonzero: return 1;
    default: return 0;
  }
}

ProfileEntry make_entry(Int n, std::vector<Summand> summands) {
  std::stable_sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    if (a.psi.has_value() != b.psi.has_value()) return b.psi.has_value();
    return a.psi && *a.psi < *b.psi;
  });
  ProfileEntry e{n, SummandStatus::Zero, std::move(summands)};
  for (const auto& s : e.summands)
    if (strength(s.status) > strength(e.status)) e.status = s.status;
  return e;
}

ProfileEntry undetermined(Int n) { return {n, SummandStatus::Undetermined, {}}; }

}  // namespace

ProfileEntry entry_at(const std::vector<ProfileEntry>& profile, Int n) {
  for (const auto& e : profile)
    if (e.n == n) return e;
  return {n, SummandStatus::Zero, {}};
}

std::vector<ProfileEntry> siegel_profile(const HighestWeight& lambda) {
  const Int d = lambda.d();
  const auto k1c = parallel_value(lambda.k1());
  const auto k2c = parallel_value(lambda.k2());
  const bool both = k1c && k2c;
  const bool equal = both && *k1c == *k2c;

  const auto i0 = KostantDecomposition::uniform(lambda.d(), 0);
  const auto i1 = KostantDecomposition::uniform(lambda.d(), 1);
  const Int w0 = hodge_weight(lambda, i0, Stratum::Siegel);
  const Int w1 = hodge_weight(lambda, i1, Stratum::Siegel);
  using S = SummandStatus;

  std::vector<ProfileEntry> out;
  for (Int n = 0; n <= 6 * d - 2; ++n) {
    std::vector<Summand> sm;
    if (n < d) {
      if (equal) sm.push_back({i0, n, 0, w0, n == 0 ? S::Nonzero : S::MayBeNonzero});
    } else if (n < 2 * d) {
      if (both) sm.push_back({i0, n, 0, w0, (n == d && *k1c != *k2c) ? S::Nonzero : S::MayBeNonzero});
    } else if (n < 3 * d) {
      if (both) {
        sm.push_back({i0, n, 0, w0, S::MayBeNonzero});
        sm.push_back({i1, n - d, d, w1, n == 2 * d ? S::Nonzero : S::MayBeNonzero});
      }
    } else {
      out.push_back(undetermined(n));
      continue;
    }
    out.push_back(make_entry(n, std::move(sm)));
  }
  return out;
}

namespace {

// (psi, kappa) pairs feeding the Klingen profile: I^0 + I^1 splits that are
// Kostant-parallel presentations, and I^2 + I^3 splits with I^2 non-empty.
std::vector<std::pair<KostantDecomposition, Int>> klingen_sources(const HighestWeight& lambda) {
  std::vector<std::pair<KostantDecomposition, Int>> out;
  for (int q = 0; q <= 3 * lambda.d(); ++q) {
    for (auto& [psi, kappa] : admissible_decompositions(lambda, q, Stratum::Klingen)) {
      const bool low = (psi.part(2) | psi.part(3)).empty();
      const bool high = (psi.part(0) | psi.part(1)).empty() && !psi.part(2).empty();
      if (low && !is_valid_presentation(lambda, {kappa, psi.part(0), psi.part(1)})) continue;
      if (low || high) out.emplace_back(psi, kappa);
    }
  }
  return out;
}

}  // namespace

std::vector<ProfileEntry> klingen_profile(const HighestWeight& lambda) {
  const Int d = lambda.d();
  const auto sources = klingen_sources(lambda);
  std::vector<ProfileEntry> out;
  for (Int n = 0; n <= 4 * d - 1; ++n) {
    if (n >= 3 * d) {
      out.push_back(undetermined(n));
      continue;
    }
    std::vector<Summand> sm;
    for (const auto& [psi, kappa] : sources) {
      const Int p = n - psi.q();
      if (p < 0 || p > d - 1) continue;
      sm.push_back({psi, p, psi.q(), hodge_weight(lambda, psi, Stratum::Klingen), SummandStatus::Nonzero});
    }
    out.push_back(make_entry(n, std::move(sm)));
  }
  return out;
}

CuspCharacter cusp_restriction(const HighestWeight& lambda) {
  CharacterCoords coords{{lambda.k1().begin(), lambda.k1().end()}, {lambda.k2().begin(), lambda.k2().end()},
                         lambda.c()};
  return cusp_restriction(coords);
}

CuspCharacter cusp_restriction(const CharacterCoords& levi) {
  const Int total = levi.c + default_c(levi.e1, levi.e2);
  if (total % 2 != 0) throw Error(ErrorKind::ParityViolation, "c + sum(e1+e2) is odd");
  return {levi.e2, total / 2};
}

std::vector<CuspSummand> cusp_raw_decomposition(const CuspCharacter& chi, int q) {
  const int d = static_cast<int>(chi.h.size());
  std::vector<CuspSummand> out;
  if (q < 0 || q > d) return out;
  for (std::uint32_t bits = 0; bits < (1U << d); ++bits) {
    EmbeddingSet I(bits);
    if (I.size() != q) continue;
    Int weight = -2 * chi.g;
    for (int s : I.members()) weight += 2 * (chi.h[static_cast<std::size_t>(s)] + 1);
    out.push_back({I, weight});
  }
  return out;
}

std::vector<ProfileEntry> hb_cusp_profile(const CuspCharacter& chi, int d) {
  if (static_cast<int>(chi.h.size()) != d)
    throw Error(ErrorKind::DimensionMismatch, "cusp character has " + std::to_string(chi.h.size()) + " entries");
  const bool parallel = parallel_value(chi.h).has_value();
  std::vector<ProfileEntry> out;
  for (Int n = 0; n <= 2 * d - 1; ++n) {
    std::vector<Summand> sm;
    if (parallel) {
      // only I = empty (degree q = 0) and I = all (q = d) survive the torus action
      const int q = n < d ? 0 : d;
      const auto raw = cusp_raw_decomposition(chi, q);
      sm.push_back({std::nullopt, n - q, q, raw.front().weight, SummandStatus::Nonzero});
    }
    out.push_back(make_entry(n, std::move(sm)));
  }
  return out;
}

std::vector<ProfileEntry> double_degeneration_profile(const HighestWeight& lambda) {
  const int d = lambda.d();
  std::vector<std::vector<Summand>> by_degree(static_cast<std::size_t>(2 * d));
  if (parallel_value(lambda.k1()) && parallel_value(lambda.k2())) {
    for (int q = 2 * d; q <= 3 * d; ++q) {
      for (const auto& [psi, kappa] : admissible_decompositions(lambda, q, Stratum::Klingen)) {
        if (!(psi.part(0) | psi.part(1)).empty() || psi.part(2).empty()) continue;
        const auto levi = levi_weight(lambda, psi, Stratum::Klingen);
        for (const auto& e : hb_cusp_profile(cusp_restriction(levi.coords), d)) {
          for (auto s : e.summands) {
            s.psi = psi;
            by_degree[static_cast<std::size_t>(e.n)].push_back(s);
          }
        }
      }
    }
  }
  std::vector<ProfileEntry> out;
  for (int n = 0; n < 2 * d; ++n) out.push_back(make_entry(n, std::move(by_degree[static_cast<std::size_t>(n)])));
  return out;
}

std::vector<ProfileEntry> perverse_profile(const HighestWeight& lambda, Stratum m) {
  const Int d = lambda.d();
  const Int w = lambda.motivic_weight();
  std::vector<ProfileEntry> out;

  if (m == Stratum::Klingen) {
    // the stratum has dimension d: shift degree by w + d, weights by d
    for (const auto& e : klingen_profile(lambda)) {
      if (e.n >= 2 * d) continue;
      std::vector<Summand> sm = e.summands;
      for (auto& s : sm) s.weight += d;
      out.push_back(make_entry(e.n + w + d, std::move(sm)));
    }
    return out;
  }

  // Siegel: in degrees [2d, 3d) the top-weight summand meets the double
  // degeneration; it is only known to survive when the parities agree
  std::set<Int> meeting;
  for (const auto& e : double_degeneration_profile(lambda)) {
    if (e.n >= d) continue;
    for (const auto& s : e.summands)
      if (s.status == SummandStatus::Nonzero) meeting.insert(s.weight);
  }
  const auto i1 = KostantDecomposition::uniform(lambda.d(), 1);
  for (const auto& e : siegel_profile(lambda)) {
    if (e.n >= 3 * d) continue;
    std::vector<Summand> sm = e.summands;
    if (e.n >= 2 * d) {
      for (auto& s : sm)
        if (s.psi == i1 && meeting.count(s.weight))
          s.status = e.n == 2 * d ? SummandStatus::NonzeroIfParity : SummandStatus::MayBeNonzero;
    }
    out.push_back(make_entry(e.n + w, std::move(sm)));
  }
  return out;
}

PerverseBoundSet perverse_bounds(const HighestWeight& lambda, Stratum m) {
  const Int d = lambda.d();
  const Int w = lambda.motivic_weight();
  PerverseBoundSet out;
  out.stratum = m;
  out.range_lo = m == Stratum::Siegel ? w : w + d;
  out.range_hi = w + 3 * d - 1;

  const auto profile = perverse_profile(lambda, m);
  std::optional<Int> beta;
  for (const auto& e : profile)
    for (const auto& s : e.summands)
      if (possibly_nonzero(s.status)) beta = std::min(beta.value_or(e.n - s.weight), e.n - s.weight);
  if (!beta) return out;

  out.applicable = true;
  out.beta = *beta;
  for (const auto& e : profile) {
    for (const auto& s : e.summands) {
      if (e.n - s.weight != *beta) continue;
      if (s.status == SummandStatus::Nonzero) out.attained.push_back({e.n, s.weight, Condition::Always});
      if (s.status == SummandStatus::NonzeroIfParity) out.attained.push_back({e.n, s.weight, Condition::IfParity});
    }
  }
  std::sort(out.attained.begin(), out.attained.end());
  out.attained.erase(std::unique(out.attained.begin(), out.attained.end()), out.attained.end());
  return out;
}

}  // namespace hsw

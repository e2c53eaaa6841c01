#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hsw/cohomology.hpp"
#include "hsw/profiles.hpp"
#include "support.hpp"

using namespace hsw;

namespace {

using WeightSet = std::set<Int>;

WeightSet weights_at(const std::vector<ProfileEntry>& prof, Int n) {
  WeightSet out;
  for (const auto& s : entry_at(prof, n).summands) out.insert(s.weight);
  return out;
}

// Klingen degrees [0, 3d) straight from the three case descriptions.
WeightSet klingen_oracle(const HighestWeight& l, Int n) {
  const Int d = l.d(), w = l.motivic_weight();
  WeightSet out;
  for (const auto& p : kostant_parallel_presentations(l)) {
    if (n < d && !p.i0.empty() && n >= p.d1()) out.insert(w - d * p.kappa);
    if (n >= d && n < 2 * d && !p.i1.empty() && n <= d - 1 + p.d1()) out.insert(w + d - d * (p.kappa + 1));
  }
  if (n >= 2 * d && n < 3 * d) {
    for (std::uint32_t bits = 1; bits < (1U << d); ++bits) {
      EmbeddingSet i2(bits);
      std::vector<Int> vals;
      for (int s = 0; s < d; ++s) vals.push_back(i2.contains(s) ? -(l.k2(s) + 3) : -(l.k1(s) + 4));
      auto kappa = parallel_value(vals);
      const Int d3 = d - i2.size();
      if (kappa && n - 2 * d - d3 >= 0 && n - 2 * d - d3 <= d - 1) out.insert(w + 3 * d + d * (-*kappa - 3));
    }
  }
  return out;
}

struct Expected {
  Int weight;
  SummandStatus status;
  friend auto operator<=>(const Expected&, const Expected&) = default;
};

std::multiset<Expected> siegel_oracle(const HighestWeight& l, Int n) {
  const Int d = l.d(), w = l.motivic_weight();
  auto k1 = parallel_value(l.k1());
  auto k2 = parallel_value(l.k2());
  using S = SummandStatus;
  std::multiset<Expected> out;
  if (!k1 || !k2) return out;
  if (n >= 0 && n < d && *k1 == *k2) out.insert({w - 2 * d * *k1, n == 0 ? S::Nonzero : S::MayBeNonzero});
  if (n >= d && n < 2 * d)
    out.insert({w - d * (*k1 + *k2), (n == d && *k1 != *k2) ? S::Nonzero : S::MayBeNonzero});
  if (n >= 2 * d && n < 3 * d) {
    out.insert({w - d * (*k1 + *k2), S::MayBeNonzero});
    out.insert({w + 2 * d - d * (*k1 - *k2), n == 2 * d ? S::Nonzero : S::MayBeNonzero});
  }
  return out;
}

std::multiset<Expected> summary(const ProfileEntry& e) {
  std::multiset<Expected> out;
  for (const auto& s : e.summands) out.insert({s.weight, s.status});
  return out;
}

bool has_attained(const PerverseBoundSet& b, Int n, Int weight, Condition c) {
  return std::find(b.attained.begin(), b.attained.end(), AttainedBound{n, weight, c}) != b.attained.end();
}

}  // namespace

TEST(SiegelProfile, Examples) {
  auto l = make_weight({3}, {1}, 4);
  auto prof = siegel_profile(l);
  EXPECT_EQ(entry_at(prof, 0).status, SummandStatus::Zero);
  EXPECT_EQ(summary(entry_at(prof, 1)), (std::multiset<Expected>{{-8, SummandStatus::Nonzero}}));
  EXPECT_EQ(summary(entry_at(prof, 2)),
            (std::multiset<Expected>{{-8, SummandStatus::MayBeNonzero}, {-4, SummandStatus::Nonzero}}));
  EXPECT_EQ(entry_at(prof, 3).status, SummandStatus::Undetermined);  // 6d-2 = 4
  EXPECT_EQ(entry_at(prof, 4).status, SummandStatus::Undetermined);
  EXPECT_EQ(entry_at(prof, 5).status, SummandStatus::Zero);
  EXPECT_EQ(entry_at(prof, -1).status, SummandStatus::Zero);

  auto m = make_weight({3, 2}, {1, 1});
  for (Int n = 0; n < 6; ++n) EXPECT_EQ(entry_at(siegel_profile(m), n).status, SummandStatus::Zero);

  auto z = make_weight({2}, {2}, 4);
  EXPECT_EQ(summary(entry_at(siegel_profile(z), 0)), (std::multiset<Expected>{{-8, SummandStatus::Nonzero}}));
}

TEST(SiegelProfile, MatchesCaseFormulas) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 600; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    // bias toward parallel weights, which is where the profile lives
    auto l = testkit::random_dominant(rng, d, 5);
    if (i % 2) {
      Int a = l.k1(0), b = l.k2(0);
      l = make_weight(std::vector<Int>(static_cast<std::size_t>(d), a), std::vector<Int>(static_cast<std::size_t>(d), b));
    }
    auto prof = siegel_profile(l);
    for (Int n = 0; n < 3 * d; ++n) EXPECT_EQ(summary(entry_at(prof, n)), siegel_oracle(l, n)) << l.to_string() << " n=" << n;
  }
}

TEST(KlingenProfile, Examples) {
  auto l = HighestWeight::character({3, 1}, {2, 2}, 8);
  auto prof = klingen_profile(l);
  EXPECT_EQ(entry_at(prof, 0).status, SummandStatus::Zero);
  EXPECT_EQ(weights_at(prof, 1), WeightSet{-10});
  EXPECT_EQ(entry_at(prof, 1).status, SummandStatus::Nonzero);
  EXPECT_EQ(weights_at(prof, 2), WeightSet{-10});
  EXPECT_EQ(weights_at(prof, 3), WeightSet{-10});
  EXPECT_EQ(weights_at(prof, 4), WeightSet{2});
  EXPECT_EQ(weights_at(prof, 5), WeightSet{2});
  EXPECT_EQ(entry_at(prof, 6).status, SummandStatus::Undetermined);
  EXPECT_EQ(entry_at(prof, 8).status, SummandStatus::Zero);

  auto z = klingen_profile(make_weight({5, 4}, {1, 3}));
  for (Int n = 0; n < 6; ++n) EXPECT_EQ(entry_at(z, n).status, SummandStatus::Zero);

  auto one = klingen_profile(make_weight({3}, {1}, 4));
  EXPECT_EQ(weights_at(one, 0), WeightSet{-7});
  EXPECT_EQ(entry_at(one, 0).status, SummandStatus::Nonzero);
}

TEST(KlingenProfile, MatchesCaseFormulas) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 800; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    auto l = testkit::random_dominant(rng, d, 5);
    auto prof = klingen_profile(l);
    for (Int n = 0; n < 3 * d; ++n) EXPECT_EQ(weights_at(prof, n), klingen_oracle(l, n)) << l.to_string() << " n=" << n;
  }
  // the non-dominant example exercises mixed I2/I3 splits too
  auto m = HighestWeight::character({3, 1}, {2, 2}, 8);
  for (Int n = 0; n < 6; ++n) EXPECT_EQ(weights_at(klingen_profile(m), n), klingen_oracle(m, n));
}

TEST(KlingenProfile, SummandsComeFromHodgeWeights) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    auto l = testkit::random_dominant(rng, d, 5);
    for (const auto& e : klingen_profile(l)) {
      for (const auto& s : e.summands) {
        if (s.status != SummandStatus::Nonzero) continue;
        ASSERT_TRUE(s.psi);
        EXPECT_EQ(s.p + s.q, e.n);
        EXPECT_GE(s.p, 0);
        EXPECT_LE(s.p, d - 1);
        EXPECT_EQ(s.weight, hodge_weight(l, *s.psi, Stratum::Klingen));
      }
    }
  }
}

TEST(KlingenProfile, CoherenceOfCases) {
  testkit::for_each_dominant(2, 5, [](const HighestWeight& l) {
    const Int d = l.d(), w = l.motivic_weight();
    auto prof = klingen_profile(l);
    for (const auto& p : kostant_parallel_presentations(l)) {
      if (p.i0.empty() || p.i1.empty()) continue;
      // case (2) is active at n = d1 < d, case (3) at n = d
      EXPECT_TRUE(weights_at(prof, p.d1()).count(w - d * p.kappa));
      EXPECT_TRUE(weights_at(prof, d).count(w + d - d * (p.kappa + 1)));
    }
  });
}

TEST(Cusp, Restriction) {
  EXPECT_EQ(cusp_restriction(make_weight({3, 3}, {1, 1}, 8)), (CuspCharacter{{1, 1}, 8}));
  EXPECT_EQ(cusp_restriction(make_weight({0}, {0}, 0)), (CuspCharacter{{0}, 0}));
  EXPECT_EQ(cusp_restriction(make_weight({3}, {1}, 4)), (CuspCharacter{{1}, 4}));
}

TEST(Cusp, ProfileExamples) {
  auto a = hb_cusp_profile({{2, 2}, 1}, 2);
  EXPECT_EQ(weights_at(a, 0), WeightSet{-2});
  EXPECT_EQ(weights_at(a, 1), WeightSet{-2});
  EXPECT_EQ(weights_at(a, 2), WeightSet{10});
  EXPECT_EQ(weights_at(a, 3), WeightSet{10});
  EXPECT_EQ(entry_at(a, 4).status, SummandStatus::Zero);

  auto b = hb_cusp_profile({{1, 2}, 0}, 2);
  for (Int n = 0; n <= 3; ++n) EXPECT_EQ(entry_at(b, n).status, SummandStatus::Zero);

  auto raw = cusp_raw_decomposition({{1, 2}, 0}, 1);
  WeightSet ws;
  for (const auto& s : raw) ws.insert(s.weight);
  EXPECT_EQ(ws, (WeightSet{4, 6}));
}

TEST(Cusp, RawDecompositionSizes) {
  for (int d = 1; d <= 5; ++d) {
    CuspCharacter chi{std::vector<Int>(static_cast<std::size_t>(d), 1), 3};
    chi.h.back() = 4;
    for (int q = 0; q <= d; ++q) {
      auto raw = cusp_raw_decomposition(chi, q);
      EXPECT_EQ(static_cast<Int>(raw.size()), binomial(d, q));
      for (const auto& s : raw) EXPECT_EQ(s.subset.size(), q);
    }
  }
}

TEST(DoubleDegeneration, Examples) {
  auto a = double_degeneration_profile(make_weight({3, 3}, {1, 1}, 8));
  EXPECT_EQ(weights_at(a, 0), WeightSet{-8});
  EXPECT_EQ(weights_at(a, 1), WeightSet{-8});
  EXPECT_EQ(weights_at(a, 2), WeightSet{12});
  EXPECT_EQ(weights_at(a, 3), WeightSet{12});
  EXPECT_EQ(entry_at(a, 4).status, SummandStatus::Zero);

  auto b = double_degeneration_profile(make_weight({3, 2}, {1, 1}));
  for (Int n = 0; n <= 4; ++n) EXPECT_EQ(entry_at(b, n).status, SummandStatus::Zero);
}

TEST(DoubleDegeneration, CaseFormulasAndSiegelMatch) {
  for (int d = 1; d <= 3; ++d) {
    testkit::for_each_dominant(d, 4, [](const HighestWeight& l) {
      const Int d = l.d(), w = l.motivic_weight();
      auto dd = double_degeneration_profile(l);
      auto k1 = parallel_value(l.k1());
      auto k2 = parallel_value(l.k2());
      if (!k1 || !k2) {
        for (Int n = 0; n < 2 * d; ++n) EXPECT_EQ(entry_at(dd, n).status, SummandStatus::Zero);
        return;
      }
      for (Int n = 0; n < d; ++n) EXPECT_EQ(weights_at(dd, n), WeightSet{w + 2 * d - d * (*k1 - *k2)});
      for (Int n = d; n < 2 * d; ++n) EXPECT_EQ(weights_at(dd, n), WeightSet{w + 6 * d + d * (*k1 + *k2)});
      // the low-degree weight is the Siegel attained weight
      auto sb = perverse_bounds(l, Stratum::Siegel);
      EXPECT_TRUE(has_attained(sb, w + 2 * d, w + 2 * d - d * (*k1 - *k2), Condition::IfParity));
    });
  }
}

TEST(PerverseBounds, Examples) {
  auto l = make_weight({3}, {1}, 4);
  auto s = perverse_bounds(l, Stratum::Siegel);
  ASSERT_TRUE(s.applicable);
  EXPECT_EQ(s.beta, 2);
  EXPECT_EQ(s.attained, (std::vector<AttainedBound>{{-2, -4, Condition::IfParity}}));
  auto k = perverse_bounds(l, Stratum::Klingen);
  ASSERT_TRUE(k.applicable);
  EXPECT_EQ(k.beta, 1);
  EXPECT_EQ(k.attained, (std::vector<AttainedBound>{{-2, -3, Condition::Always}}));
  EXPECT_EQ(k.range_lo, -3);
  EXPECT_EQ(k.range_hi, -2);

  auto m = make_weight({3, 2}, {1, 1});
  EXPECT_FALSE(perverse_bounds(m, Stratum::Siegel).applicable);
  auto mk = perverse_bounds(m, Stratum::Klingen);
  EXPECT_EQ(mk.beta, 2);
  ASSERT_EQ(mk.attained.size(), 1U);
  EXPECT_EQ(mk.attained[0].n, m.motivic_weight() + 4);

  auto z = make_weight({5, 4}, {1, 3});
  EXPECT_FALSE(perverse_bounds(z, Stratum::Siegel).applicable);
  EXPECT_FALSE(perverse_bounds(z, Stratum::Klingen).applicable);
}

TEST(PerverseBounds, MatchDescription) {
  for (int d = 1; d <= 3; ++d) {
    testkit::for_each_dominant(d, 4, [](const HighestWeight& l) {
      const Int d = l.d(), w = l.motivic_weight();
      auto sb = perverse_bounds(l, Stratum::Siegel);
      auto kb = perverse_bounds(l, Stratum::Klingen);
      auto k1 = parallel_value(l.k1());
      auto k2 = parallel_value(l.k2());
      auto ps = kostant_parallel_presentations(l);

      EXPECT_EQ(sb.applicable, k1 && k2);
      if (sb.applicable) {
        EXPECT_EQ(sb.beta, d * (*k1 - *k2));
        EXPECT_TRUE(has_attained(sb, w + 2 * d, w + 2 * d - d * (*k1 - *k2), Condition::IfParity));
      }
      EXPECT_EQ(kb.applicable, !ps.empty());
      if (kb.applicable) {
        if (!k2) {
          auto p = std::min_element(ps.begin(), ps.end(), [](auto& a, auto& b) { return a.d1() < b.d1(); });
          EXPECT_EQ(kb.beta, p->d1() + d * p->kappa);
          const Int n = w + d + p->d1();
          EXPECT_TRUE(has_attained(kb, n, n - kb.beta, Condition::Always));
        } else {
          EXPECT_EQ(kb.beta, d * *k2);
          EXPECT_TRUE(has_attained(kb, w + 2 * d, w + 2 * d - kb.beta, Condition::Always));
        }
      }
      for (const auto* b : {&sb, &kb})
        for (const auto& a : b->attained) {
          EXPECT_GE(a.n, b->range_lo);
          EXPECT_LE(a.n, b->range_hi);
          EXPECT_EQ(a.weight, a.n - b->beta);
        }
    });
  }
}

TEST(PerverseBounds, KlingenBetaFromClassicalProfile) {
  for (int d = 1; d <= 3; ++d) {
    testkit::for_each_dominant(d, 4, [](const HighestWeight& l) {
      const Int d = l.d(), w = l.motivic_weight();
      std::optional<Int> best;
      for (const auto& e : klingen_profile(l)) {
        if (e.n >= 2 * d) continue;  // outside the perverse range [w+d, w+3d-1]
        for (const auto& s : e.summands)
          if (s.status == SummandStatus::Nonzero) best = std::min(best.value_or(e.n + w - s.weight), e.n + w - s.weight);
      }
      auto kb = perverse_bounds(l, Stratum::Klingen);
      EXPECT_EQ(kb.applicable, best.has_value());
      if (best) EXPECT_EQ(kb.beta, *best);
    });
  }
}

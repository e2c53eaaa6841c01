#pragma once

// Characters of the maximal torus of the genus-2 Hilbert-Siegel group over a
// splitting field. A character is ((k1[s], k2[s]) for each real embedding s, c)
// with sum(k1 + k2) = c mod 2; it is dominant when k1[s] >= k2[s] >= 0.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hsw {

using Int = std::int64_t;

/// Subset of the embedding index set {0, ..., d-1}, stored as a bit mask.
class EmbeddingSet {
 public:
  static constexpr int kMaxEmbeddings = 32;

  constexpr EmbeddingSet() = default;
  constexpr explicit EmbeddingSet(std::uint32_t bits) : bits_(bits) {}

  static EmbeddingSet full(int d);
  static EmbeddingSet of(std::initializer_list<int> members);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  int size() const;

  void insert(int s) { bits_ |= (1U << s); }
  std::vector<int> members() const;

  friend constexpr EmbeddingSet operator|(EmbeddingSet a, EmbeddingSet b) {
    return EmbeddingSet(a.bits_ | b.bits_);
  }
  friend constexpr EmbeddingSet operator&(EmbeddingSet a, EmbeddingSet b) {
    return EmbeddingSet(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(EmbeddingSet, EmbeddingSet) = default;
  friend constexpr auto operator<=>(EmbeddingSet a, EmbeddingSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// The character lambda((k1, k2), c). Values built through make_weight() are
/// dominant; HighestWeight::character() only enforces shape and parity, which
/// is all the combinatorial definitions (parallelism, corank) require.
class HighestWeight {
 public:
  static HighestWeight character(std::vector<Int> k1, std::vector<Int> k2, Int c);

  int d() const { return static_cast<int>(k1_.size()); }
  std::span<const Int> k1() const { return k1_; }
  std::span<const Int> k2() const { return k2_; }
  Int k1(int s) const { return k1_[static_cast<std::size_t>(s)]; }
  Int k2(int s) const { return k2_[static_cast<std::size_t>(s)]; }
  Int c() const { return c_; }

  /// w(lambda) = -c.
  Int motivic_weight() const { return -c_; }
  bool dominant() const;

  std::string to_string() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  HighestWeight(std::vector<Int> k1, std::vector<Int> k2, Int c)
      : k1_(std::move(k1)), k2_(std::move(k2)), c_(c) {}

  std::vector<Int> k1_;
  std::vector<Int> k2_;
  Int c_ = 0;
};

/// Validated dominant weight. Throws Error with kind NotDominant,
/// ParityViolation, EmptyEmbeddingSet or LengthMismatch.
HighestWeight make_weight(std::vector<Int> k1, std::vector<Int> k2, Int c);

/// Same, with c defaulted to sum(k1 + k2).
HighestWeight make_weight(std::vector<Int> k1, std::vector<Int> k2);

Int default_c(std::span<const Int> k1, std::span<const Int> k2);

/// The constant value of a list, if it has one.
std::optional<Int> parallel_value(std::span<const Int> values);

/// A decomposition {0..d-1} = i0 | i1 with k1 = kappa on i0 and k2 = kappa + 1 on i1.
struct ParallelPresentation {
  Int kappa = 0;
  EmbeddingSet i0;
  EmbeddingSet i1;

  int d1() const { return i1.size(); }

  friend bool operator==(const ParallelPresentation&, const ParallelPresentation&) = default;
};

struct WeightClassification {
  std::vector<bool> regular_at;
  bool regular = false;
  bool completely_irregular = false;
  int corank = 0;
  Int motivic_weight = 0;
};

WeightClassification classify_weight(const HighestWeight& lambda);

/// Every (kappa, i0, i1) presentation, sorted by (kappa, |i1|, i1).
std::vector<ParallelPresentation> kostant_parallel_presentations(const HighestWeight& lambda);

/// True when (kappa, i0, i1) is a partition satisfying the defining equations
/// and the kappa range (kappa >= 0 if i0 is non-empty, kappa >= -1 always).
bool is_valid_presentation(const HighestWeight& lambda, const ParallelPresentation& p);

}  // namespace hsw

#include "hsw/character_lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "hsw/error.hpp"

namespace hsw {

EmbeddingSet EmbeddingSet::full(int d) {
  if (d < 0 || d > kMaxEmbeddings) throw Error(ErrorKind::SizeLimit, "d=" + std::to_string(d));
  return EmbeddingSet(d == 32 ? ~0U : ((1U << d) - 1U));
}

EmbeddingSet EmbeddingSet::of(std::initializer_list<int> members) {
  EmbeddingSet s;
  for (int m : members) s.insert(m);
  return s;
}

int EmbeddingSet::size() const { return std::popcount(bits_); }

std::vector<int> EmbeddingSet::members() const {
  std::vector<int> out;
  for (int s = 0; s < kMaxEmbeddings; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

namespace {

Int floor_mod2(Int x) { return ((x % 2) + 2) % 2; }

void check_shape(const std::vector<Int>& k1, const std::vector<Int>& k2) {
  if (k1.size() != k2.size())
    throw Error(ErrorKind::LengthMismatch,
                "k1 has " + std::to_string(k1.size()) + " entries, k2 has " + std::to_string(k2.size()));
  if (k1.empty()) throw Error(ErrorKind::EmptyEmbeddingSet, "d must be at least 1");
  if (k1.size() > static_cast<std::size_t>(EmbeddingSet::kMaxEmbeddings))
    throw Error(ErrorKind::SizeLimit, "at most 32 embeddings are supported");
}

}  // namespace

Int default_c(std::span<const Int> k1, std::span<const Int> k2) {
  return std::accumulate(k1.begin(), k1.end(), Int{0}) + std::accumulate(k2.begin(), k2.end(), Int{0});
}

HighestWeight HighestWeight::character(std::vector<Int> k1, std::vector<Int> k2, Int c) {
  check_shape(k1, k2);
  Int sum = default_c(k1, k2);
  if (floor_mod2(sum) != floor_mod2(c))
    throw Error(ErrorKind::ParityViolation,
                "sum(k1+k2)=" + std::to_string(sum) + " and c=" + std::to_string(c) + " differ mod 2");
  return HighestWeight(std::move(k1), std::move(k2), c);
}

bool HighestWeight::dominant() const {
  for (int s = 0; s < d(); ++s)
    if (k1(s) < k2(s) || k2(s) < 0) return false;
  return true;
}

std::string HighestWeight::to_string() const {
  std::ostringstream os;
  os << "lambda((";
  for (int s = 0; s < d(); ++s) os << (s ? ", " : "") << "(" << k1(s) << "," << k2(s) << ")";
  os << "), " << c_ << ")";
  return os.str();
}

HighestWeight make_weight(std::vector<Int> k1, std::vector<Int> k2, Int c) {
  check_shape(k1, k2);
  for (std::size_t s = 0; s < k1.size(); ++s) {
    if (k1[s] < k2[s] || k2[s] < 0) {
      std::ostringstream os;
      os << "embedding " << s << ": need k1 >= k2 >= 0, got (" << k1[s] << "," << k2[s] << ")";
      throw Error(ErrorKind::NotDominant, os.str());
    }
  }
  return HighestWeight::character(std::move(k1), std::move(k2), c);
}

HighestWeight make_weight(std::vector<Int> k1, std::vector<Int> k2) {
  check_shape(k1, k2);
  Int c = default_c(k1, k2);
  return make_weight(std::move(k1), std::move(k2), c);
}

std::optional<Int> parallel_value(std::span<const Int> values) {
  if (values.empty()) return std::nullopt;
  for (Int v : values)
    if (v != values.front()) return std::nullopt;
  return values.front();
}

WeightClassification classify_weight(const HighestWeight& lambda) {
  WeightClassification out;
  const int d = lambda.d();
  out.regular_at.resize(static_cast<std::size_t>(d));
  int regular_count = 0;
  for (int s = 0; s < d; ++s) {
    bool r = lambda.k1(s) > lambda.k2(s) && lambda.k2(s) > 0;
    out.regular_at[static_cast<std::size_t>(s)] = r;
    regular_count += r ? 1 : 0;
  }
  out.regular = regular_count == d;
  out.completely_irregular = regular_count == 0;

  auto k2c = parallel_value(lambda.k2());
  if (!k2c) {
    out.corank = 0;
  } else {
    bool equal = std::equal(lambda.k1().begin(), lambda.k1().end(), lambda.k2().begin());
    out.corank = equal ? 2 : 1;
  }
  out.motivic_weight = lambda.motivic_weight();
  return out;
}

bool is_valid_presentation(const HighestWeight& lambda, const ParallelPresentation& p) {
  const EmbeddingSet all = EmbeddingSet::full(lambda.d());
  if ((p.i0 | p.i1) != all || !(p.i0 & p.i1).empty()) return false;
  if (p.kappa < -1) return false;
  if (!p.i0.empty() && p.kappa < 0) return false;
  for (int s = 0; s < lambda.d(); ++s) {
    if (p.i0.contains(s) && lambda.k1(s) != p.kappa) return false;
    if (p.i1.contains(s) && lambda.k2(s) != p.kappa + 1) return false;
  }
  return true;
}

std::vector<ParallelPresentation> kostant_parallel_presentations(const HighestWeight& lambda) {
  // A presentation is pinned down by kappa and, for each embedding, which of
  // the two equations it satisfies. Candidates for kappa come from the entries.
  const int d = lambda.d();
  std::set<Int> candidates;
  for (int s = 0; s < d; ++s) {
    candidates.insert(lambda.k1(s));
    candidates.insert(lambda.k2(s) - 1);
  }

  std::vector<ParallelPresentation> out;
  for (Int kappa : candidates) {
    std::vector<int> both;
    EmbeddingSet i0, i1;
    bool ok = true;
    for (int s = 0; s < d && ok; ++s) {
      bool a = lambda.k1(s) == kappa;
      bool b = lambda.k2(s) == kappa + 1;
      if (a && b) both.push_back(s);
      else if (a) i0.insert(s);
      else if (b) i1.insert(s);
      else ok = false;
    }
    if (!ok) continue;
    // embeddings satisfying both equations may go either way
    const std::uint32_t choices = 1U << both.size();
    for (std::uint32_t mask = 0; mask < choices; ++mask) {
      ParallelPresentation p{kappa, i0, i1};
      for (std::size_t j = 0; j < both.size(); ++j) {
        if ((mask >> j) & 1U) p.i1.insert(both[j]);
        else p.i0.insert(both[j]);
      }
      if (is_valid_presentation(lambda, p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const ParallelPresentation& a, const ParallelPresentation& b) {
    if (a.kappa != b.kappa) return a.kappa < b.kappa;
    if (a.d1() != b.d1()) return a.d1() < b.d1();
    return a.i1 < b.i1;
  });
  return out;
}

}  // namespace hsw

#include "hsw/kostant.hpp"

#include "hsw/error.hpp"

namespace hsw {

KostantDecomposition::KostantDecomposition(std::vector<int> levels) : levels_(std::move(levels)) {
  for (int l : levels_)
    if (l < 0 || l > 3) throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(l) + " not in 0..3");
}

KostantDecomposition KostantDecomposition::uniform(int d, int level) {
  return KostantDecomposition(std::vector<int>(static_cast<std::size_t>(d), level));
}

EmbeddingSet KostantDecomposition::part(int i) const {
  EmbeddingSet out;
  for (int s = 0; s < d(); ++s)
    if (level(s) == i) out.insert(s);
  return out;
}

int KostantDecomposition::q() const {
  int q = 0;
  for (int l : levels_) q += l;
  return q;
}

std::string KostantDecomposition::to_string() const {
  std::string out;
  for (int l : levels_) out += static_cast<char>('0' + l);
  return out;
}

namespace {

void fill(std::vector<int>& word, std::size_t pos, int remaining, std::vector<KostantDecomposition>& out) {
  if (pos == word.size()) {
    if (remaining == 0) out.emplace_back(word);
    return;
  }
  const int slots = static_cast<int>(word.size() - pos - 1);
  for (int l = 0; l <= 3; ++l) {
    if (l > remaining) break;
    if (remaining - l > 3 * slots) continue;
    word[pos] = l;
    fill(word, pos + 1, remaining - l, out);
  }
}

void check_d(const HighestWeight& lambda, const KostantDecomposition& psi) {
  if (lambda.d() != psi.d())
    throw Error(ErrorKind::DimensionMismatch,
                "weight has d=" + std::to_string(lambda.d()) + ", decomposition has d=" + std::to_string(psi.d()));
}

// Per-embedding value of the stratum's linear form on the Levi character; it
// is the quantity that must equal kappa and whose sum shifts the weight.
Int pairing_term(Int k1, Int k2, int level, Stratum m) {
  if (m == Stratum::Siegel) {
    switch (level) {
      case 0: return k1 + k2;
      case 1: return k1 - k2 - 2;
      case 2: return -(k1 - k2 + 4);
      default: return -(k1 + k2 + 6);
    }
  }
  switch (level) {
    case 0: return k1;
    case 1: return k2 - 1;
    case 2: return -(k2 + 3);
    default: return -(k1 + 4);
  }
}

}  // namespace

std::vector<KostantDecomposition> decompositions(int d, int q) {
  std::vector<KostantDecomposition> out;
  if (d < 1 || q < 0 || q > 3 * d) return out;
  std::vector<int> word(static_cast<std::size_t>(d), 0);
  fill(word, 0, q, out);
  return out;
}

KostantDecomposition decomposition_of(const WeylElement& w) {
  std::vector<int> levels;
  for (int s = 0; s < w.d(); ++s) levels.push_back(w.factor_length(s));
  return KostantDecomposition(std::move(levels));
}

Int LeviCharacter::pairing_weight() const {
  Int sum = 0;
  for (std::size_t s = 0; s < coords.e1.size(); ++s)
    sum += coords.e1[s] + (stratum == Stratum::Siegel ? coords.e2[s] : 0);
  return -coords.c - sum;
}

LeviCharacter levi_weight(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m) {
  check_d(lambda, psi);
  LeviCharacter out;
  out.stratum = m;
  out.psi = psi;
  out.coords.c = lambda.c();
  for (int s = 0; s < lambda.d(); ++s) {
    const Int k1 = lambda.k1(s), k2 = lambda.k2(s);
    Int e1 = 0, e2 = 0;
    if (m == Stratum::Siegel) {
      switch (psi.level(s)) {
        case 0: e1 = k1; e2 = k2; break;
        case 1: e1 = k1; e2 = -k2 - 2; break;
        case 2: e1 = k2 - 1; e2 = -k1 - 3; break;
        default: e1 = -k2 - 3; e2 = -k1 - 3; break;
      }
    } else {
      switch (psi.level(s)) {
        case 0: e1 = k1; e2 = k2; break;
        case 1: e1 = k2 - 1; e2 = k1 + 1; break;
        case 2: e1 = -k2 - 3; e2 = k1 + 1; break;
        default: e1 = -k1 - 4; e2 = k2; break;
      }
    }
    out.coords.e1.push_back(e1);
    out.coords.e2.push_back(e2);
  }
  out.hodge_weight = hodge_weight(lambda, psi, m);
  return out;
}

Int hodge_weight(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m) {
  check_d(lambda, psi);
  Int bracket = 0;
  for (int s = 0; s < lambda.d(); ++s) bracket += pairing_term(lambda.k1(s), lambda.k2(s), psi.level(s), m);
  return lambda.motivic_weight() - bracket;
}

std::optional<Int> parallel_condition(const HighestWeight& lambda, const KostantDecomposition& psi, Stratum m) {
  check_d(lambda, psi);
  std::vector<Int> values;
  for (int s = 0; s < lambda.d(); ++s) values.push_back(pairing_term(lambda.k1(s), lambda.k2(s), psi.level(s), m));
  return parallel_value(values);
}

std::vector<std::pair<KostantDecomposition, Int>> admissible_decompositions(const HighestWeight& lambda, int q,
                                                                            Stratum m) {
  std::vector<std::pair<KostantDecomposition, Int>> out;
  for (auto& psi : decompositions(lambda.d(), q))
    if (auto kappa = parallel_condition(lambda, psi, m)) out.emplace_back(std::move(psi), *kappa);
  return out;
}

}  // namespace hsw

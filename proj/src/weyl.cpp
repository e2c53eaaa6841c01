#include "hsw/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hsw/error.hpp"

namespace hsw {

C2Element C2Element::operator*(const C2Element& r) const {
  return {{m[0] * r.m[0] + m[1] * r.m[2], m[0] * r.m[1] + m[1] * r.m[3],
           m[2] * r.m[0] + m[3] * r.m[2], m[2] * r.m[1] + m[3] * r.m[3]}};
}

namespace {

std::string signed_var(Int coef, char var) {
  if (coef == 0) return "";
  return std::string(coef < 0 ? "-" : "") + var;
}

}  // namespace

std::string C2Element::describe() const {
  auto row = [](Int x, Int y) { return signed_var(x, 'a') + signed_var(y, 'b'); };
  return "(" + row(m[0], m[1]) + "," + row(m[2], m[3]) + ")";
}

bool is_positive_root(Vec2 v) {
  return std::find(kPositiveRoots.begin(), kPositiveRoots.end(), v) != kPositiveRoots.end();
}

C2Element reflection(Vec2 alpha) {
  const Int n = alpha.a * alpha.a + alpha.b * alpha.b;
  // entries of I - 2 alpha alpha^T / n; integral for every root of C2
  return {{1 - 2 * alpha.a * alpha.a / n, -2 * alpha.a * alpha.b / n,
           -2 * alpha.b * alpha.a / n, 1 - 2 * alpha.b * alpha.b / n}};
}

const std::vector<C2Element>& c2_elements() {
  static const std::vector<C2Element> elems = [] {
    // closure of the two simple reflections
    const C2Element s1 = reflection(kPositiveRoots[0]);
    const C2Element s2 = reflection(kPositiveRoots[1]);
    std::set<C2Element> seen{C2Element::identity()};
    std::vector<C2Element> frontier{C2Element::identity()};
    while (!frontier.empty()) {
      std::vector<C2Element> next;
      for (const auto& g : frontier)
        for (const auto& s : {s1, s2})
          if (seen.insert(s * g).second) next.push_back(s * g);
      frontier = std::move(next);
    }
    return std::vector<C2Element>(seen.begin(), seen.end());
  }();
  return elems;
}

std::vector<Vec2> factor_inversion_set(const C2Element& w) {
  const C2Element winv = w.inverse();
  std::vector<Vec2> out;
  for (Vec2 alpha : kPositiveRoots)
    if (!is_positive_root(winv.apply(alpha))) out.push_back(alpha);
  return out;
}

int factor_length(const C2Element& w) { return static_cast<int>(factor_inversion_set(w).size()); }

WeylElement::WeylElement(std::vector<C2Element> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) length_ += hsw::factor_length(f);
}

int WeylElement::factor_length(int s) const { return hsw::factor_length(factor(s)); }

std::vector<Root> WeylElement::inversion_set() const {
  std::vector<Root> out;
  for (int s = 0; s < d(); ++s)
    for (Vec2 alpha : factor_inversion_set(factor(s))) out.push_back({s, alpha});
  return out;
}

std::string_view to_string(Stratum m) { return m == Stratum::Siegel ? "siegel" : "klingen"; }

std::vector<Vec2> unipotent_roots(Stratum m) {
  if (m == Stratum::Siegel) return {{0, 2}, {1, 1}, {2, 0}};
  return {{1, -1}, {1, 1}, {2, 0}};
}

std::vector<WeylElement> enumerate_weyl(int d, std::uint64_t cap) {
  if (d < 1) throw Error(ErrorKind::EmptyEmbeddingSet, "d must be at least 1");
  std::uint64_t count = 1;
  for (int s = 0; s < d; ++s) {
    count *= 8;
    if (count > cap)
      throw Error(ErrorKind::SizeLimit, "8^" + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  }
  const auto& base = c2_elements();
  std::vector<WeylElement> out;
  out.reserve(count);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<C2Element> f;
    f.reserve(idx.size());
    for (auto j : idx) f.push_back(base[j]);
    out.emplace_back(std::move(f));
    for (int s = d - 1; s >= 0; --s) {
      auto& j = idx[static_cast<std::size_t>(s)];
      if (++j < base.size()) break;
      j = 0;
    }
  }
  return out;
}

std::vector<WeylElement> kostant_set(int d, Stratum m, std::uint64_t cap) {
  const auto allowed = unipotent_roots(m);
  std::vector<WeylElement> out;
  for (auto& w : enumerate_weyl(d, cap)) {
    bool inside = true;
    for (const Root& r : w.inversion_set())
      if (std::find(allowed.begin(), allowed.end(), r.coords) == allowed.end()) inside = false;
    if (inside) out.push_back(std::move(w));
  }
  return out;
}

CharacterCoords dot_action(const WeylElement& w, const HighestWeight& lambda) {
  if (w.d() != lambda.d())
    throw Error(ErrorKind::DimensionMismatch,
                "Weyl element has d=" + std::to_string(w.d()) + ", weight has d=" + std::to_string(lambda.d()));
  CharacterCoords out;
  out.c = lambda.c();
  for (int s = 0; s < w.d(); ++s) {
    Vec2 v = w.factor(s).apply({lambda.k1(s) + kRho.a, lambda.k2(s) + kRho.b});
    out.e1.push_back(v.a - kRho.a);
    out.e2.push_back(v.b - kRho.b);
  }
  return out;
}

std::string AffineForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](Int coef, const char* var) {
    if (coef == 0) return;
    if (coef < 0) os << "-";
    else if (!first) os << "+";
    if (coef != 1 && coef != -1) os << (coef < 0 ? -coef : coef);
    os << var;
    first = false;
  };
  term(x, "k1");
  term(y, "k2");
  if (z != 0 || first) {
    if (z >= 0 && !first) os << "+";
    os << z;
  }
  return os.str();
}

std::array<AffineForm, 2> symbolic_dot_action(const C2Element& w) {
  // w (k1 + 2, k2 + 1) - (2, 1), row by row
  const auto& m = w.m;
  return {AffineForm{m[0], m[1], m[0] * kRho.a + m[1] * kRho.b - kRho.a},
          AffineForm{m[2], m[3], m[2] * kRho.a + m[3] * kRho.b - kRho.b}};
}

}  // namespace hsw

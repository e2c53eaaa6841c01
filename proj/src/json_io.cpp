#include "hsw/json_io.hpp"

#include "hsw/error.hpp"

namespace hsw {

namespace {

std::vector<Int> int_list(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" entries must be integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

}  // namespace

HighestWeight weight_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "weight must be a JSON object");
  auto k1 = int_list(j, "k1");
  auto k2 = int_list(j, "k2");
  if (j.contains("c") && !j.at("c").is_null()) {
    if (!j.at("c").is_number_integer()) throw Error(ErrorKind::ParseError, "\"c\" must be an integer");
    return make_weight(std::move(k1), std::move(k2), j.at("c").get<Int>());
  }
  return make_weight(std::move(k1), std::move(k2));
}

HighestWeight parse_weight(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return weight_from_json(j);
}

Json to_json(const HighestWeight& lambda) {
  return Json{{"k1", std::vector<Int>(lambda.k1().begin(), lambda.k1().end())},
              {"k2", std::vector<Int>(lambda.k2().begin(), lambda.k2().end())},
              {"c", lambda.c()}};
}

Json to_json(const EmbeddingSet& s) { return s.members(); }

Json to_json(const ParallelPresentation& p) {
  return Json{{"kappa", p.kappa}, {"i0", to_json(p.i0)}, {"i1", to_json(p.i1)}};
}

Json to_json(const KostantDecomposition& psi) {
  Json parts = Json::array();
  for (int i = 0; i < 4; ++i) parts.push_back(to_json(psi.part(i)));
  return Json{{"levels", psi.levels()}, {"parts", parts}, {"q", psi.q()}};
}

Json to_json(const Summand& s) {
  return Json{{"psi", s.psi ? to_json(*s.psi) : Json(nullptr)},
              {"p", s.p},
              {"q", s.q},
              {"weight", s.weight},
              {"status", to_string(s.status)}};
}

Json to_json(const ProfileEntry& e) {
  Json sm = Json::array();
  for (const auto& s : e.summands) sm.push_back(to_json(s));
  return Json{{"n", e.n}, {"status", to_string(e.status)}, {"summands", sm}};
}

Json to_json(const std::vector<ProfileEntry>& profile) {
  Json out = Json::array();
  for (const auto& e : profile) out.push_back(to_json(e));
  return out;
}

Json to_json(const PerverseBoundSet& b) {
  Json attained = Json::array();
  for (const auto& a : b.attained)
    attained.push_back(Json{{"n", a.n}, {"weight", a.weight}, {"condition", to_string(a.condition)}});
  return Json{{"stratum", to_string(b.stratum)},
              {"applicable", b.applicable},
              {"degreeRange", Json{{"lo", b.range_lo}, {"hi", b.range_hi}}},
              {"beta", b.applicable ? Json(b.beta) : Json(nullptr)},
              {"attained", attained}};
}

Json to_json(const AvoidanceReport& r) {
  Json pres = Json::array();
  for (const auto& p : r.presentations) pres.push_back(to_json(p));
  Json interval = nullptr;
  if (r.boundary_zero) interval = "ALL";
  else if (r.avoided_interval) interval = Json{{"lo", r.avoided_interval->lo}, {"hi", r.avoided_interval->hi}};
  Json appearing = Json::array();
  for (const auto& a : r.appearing_weights) appearing.push_back(Json{{"w", a.w}, {"condition", to_string(a.condition)}});
  return Json{{"lambda", to_json(r.lambda)},
              {"corank", r.corank},
              {"completelyIrregular", r.completely_irregular},
              {"presentations", pres},
              {"boundaryZero", r.boundary_zero},
              {"avoidedInterval", interval},
              {"appearingWeights", appearing},
              {"weights01Present", r.weights01_present},
              {"intersectionMotiveExists", r.intersection_motive_exists},
              {"multiPresentation", r.multi_presentation}};
}

Json to_json(const WeylElement& w) {
  Json factors = Json::array();
  for (int s = 0; s < w.d(); ++s) {
    const auto& f = w.factor(s);
    const auto dot = symbolic_dot_action(f);
    factors.push_back(Json{{"map", f.describe()},
                           {"matrix", f.m},
                           {"length", w.factor_length(s)},
                           {"dotAction", Json::array({dot[0].to_string(), dot[1].to_string()})}});
  }
  Json inv = Json::array();
  for (const auto& r : w.inversion_set())
    inv.push_back(Json{{"embedding", r.embedding}, {"root", Json::array({r.coords.a, r.coords.b})}});
  return Json{{"length", w.length()}, {"factors", factors}, {"inversionSet", inv}};
}

}  // namespace hsw

#pragma once

#include <json.hpp>

#include "hsw/avoidance.hpp"
#include "hsw/cohomology.hpp"
#include "hsw/kostant.hpp"
#include "hsw/profiles.hpp"
#include "hsw/weyl.hpp"

namespace hsw {

using Json = nlohmann::ordered_json;

/// {"k1":[..],"k2":[..],"c":N}; c defaults to sum(k1+k2). Validates dominance.
HighestWeight weight_from_json(const Json& j);
HighestWeight parse_weight(const std::string& text);

Json to_json(const HighestWeight& lambda);
Json to_json(const EmbeddingSet& s);
Json to_json(const ParallelPresentation& p);
Json to_json(const KostantDecomposition& psi);
Json to_json(const Summand& s);
Json to_json(const ProfileEntry& e);
Json to_json(const std::vector<ProfileEntry>& profile);
Json to_json(const PerverseBoundSet& b);
Json to_json(const AvoidanceReport& r);
Json to_json(const WeylElement& w);

}  // namespace hsw

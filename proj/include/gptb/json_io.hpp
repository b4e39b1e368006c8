#pragma once

#include <json.hpp>

#include "gptb/channel.hpp"
#include "gptb/config.hpp"
#include "gptb/model.hpp"
#include "gptb/rac.hpp"
#include "gptb/resource.hpp"

namespace gptb {

using Json = nlohmann::ordered_json;

// Scalars cross JSON as strings: "p/q" in exact mode, shortest round-trip
// decimals in float mode.
Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Scalar::Mode mode);

Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j, Scalar::Mode mode);

/// {"r": [...], "s": [...]} for single systems (plus "name" when the
/// channel is a γ pair); {"matrix": [[...], ...]} for composites.
Json channel_json(const Channel& c);
/// Accepts the object forms above or a symbolic name string.
Channel channel_from_json(const Json& j, Scalar::Mode mode);

/// {"kind":"evengon","k":2} or {"kind":"composite","factors":[...]}.
Json model_descriptor(const Model& m);
Model model_from_descriptor(const Json& j, Scalar::Mode mode);

Json membership_json(const MembershipReport& r);
Json separation_json(const HullSeparation& s);
Json channel_class_json(const ChannelClass& c);
Json collision_json(const CollisionCertificate& c);
Json rac_outcome_json(const RacOutcome& o);

std::string channel_set_name(ChannelSet set);
ChannelSet channel_set_from_name(const std::string& name);
std::string resource_set_name(ResourceSet set);
ResourceSet resource_set_from_name(const std::string& name);

}  // namespace gptb

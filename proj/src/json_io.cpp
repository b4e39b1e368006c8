#include "gptb/json_io.hpp"

#include "gptb/errors.hpp"

namespace gptb {

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, Scalar::Mode mode) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        return mode == Scalar::Mode::exact ? Scalar::exact(v) : Scalar::real(static_cast<double>(v));
    }
    if (j.is_number()) {
        if (mode == Scalar::Mode::exact)
            throw ParseError("exact mode requires scalars as strings (got a JSON float)");
        return Scalar::real(j.get<double>());
    }
    throw ParseError("scalar JSON must be a string or number");
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (size_t i = 0; i < v.dim(); ++i) a.push_back(scalar_json(v[i]));
    return a;
}

Vec vec_from_json(const Json& j, Scalar::Mode mode) {
    if (!j.is_array() || j.empty()) throw ParseError("vector JSON must be a nonempty array");
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(scalar_from_json(e, mode));
    return Vec(std::move(c));
}

Json channel_json(const Channel& c) {
    Json j;
    if (c.dim() == 3) {
        if (auto name = channel_name(c, 1e-12)) j["name"] = *name;
        j["r"] = vec_json(c.r());
        j["s"] = vec_json(c.s());
    } else {
        Json rows = Json::array();
        for (size_t i = 0; i < c.dim(); ++i) rows.push_back(vec_json(c.matrix().row(i)));
        j["matrix"] = rows;
    }
    return j;
}

Channel channel_from_json(const Json& j, Scalar::Mode mode) {
    if (j.is_string()) return parse_channel_name(j.get<std::string>(), mode);
    if (j.contains("r") && j.contains("s"))
        return Channel::from_rows(vec_from_json(j["r"], mode), vec_from_json(j["s"], mode));
    if (j.contains("matrix")) {
        const Json& rows = j["matrix"];
        if (!rows.is_array() || rows.empty()) throw ParseError("channel matrix must be a nonempty array");
        std::vector<Vec> vrows;
        for (const auto& r : rows) vrows.push_back(vec_from_json(r, mode));
        return Channel::from_matrix(Mat::from_rows(vrows));
    }
    if (j.contains("name")) return parse_channel_name(j["name"].get<std::string>(), mode);
    throw ParseError("channel JSON needs 'r'/'s', 'matrix', or a symbolic name");
}

Json model_descriptor(const Model& m) {
    Json j;
    if (m.is_composite()) {
        j["kind"] = "composite";
        Json f = Json::array();
        for (const Model& x : m.factors()) f.push_back(model_descriptor(x));
        j["factors"] = f;
    } else {
        j["kind"] = "evengon";
        j["k"] = m.gon_k();
    }
    return j;
}

Model model_from_descriptor(const Json& j, Scalar::Mode mode) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "square") return Model::evengon(2, mode);
        if (s == "hexagon") return Model::evengon(3, Scalar::Mode::real);
        throw ParseError("unknown model name '" + s + "' (use square|hexagon or a descriptor)");
    }
    if (!j.contains("kind")) throw ParseError("model descriptor needs a 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "evengon") {
        unsigned k = j.at("k").get<unsigned>();
        if (k > 2) return Model::evengon(k, Scalar::Mode::real);
        return Model::evengon(k, mode);
    }
    if (kind == "composite") {
        std::vector<Model> factors;
        for (const auto& f : j.at("factors")) factors.push_back(model_from_descriptor(f, mode));
        return Model::composite(std::move(factors));
    }
    throw ParseError("unknown model kind '" + kind + "'");
}

Json separation_json(const HullSeparation& s) {
    Json j;
    j["functional"] = vec_json(s.functional);
    j["threshold"] = scalar_json(s.threshold);
    j["gap"] = scalar_json(s.gap);
    return j;
}

Json membership_json(const MembershipReport& r) {
    Json j;
    j["member"] = r.member;
    if (r.weights) {
        Json w = Json::array();
        for (const Scalar& x : *r.weights) w.push_back(scalar_json(x));
        j["weights"] = w;
    }
    if (r.separation) j["separation"] = separation_json(*r.separation);
    return j;
}

Json channel_class_json(const ChannelClass& c) {
    Json j;
    j["admissible"] = c.admissible;
    j["reversible"] = c.reversible;
    j["bistochastic"] = c.bistochastic;
    j["extreme"] = c.extreme;
    j["measure_and_prepare"] = c.measure_and_prepare;
    return j;
}

Json collision_json(const CollisionCertificate& c) {
    Json j;
    j["a"] = "w" + std::to_string(c.a);
    j["b"] = "w" + std::to_string(c.b);
    j["c"] = "w" + std::to_string(c.c);
    j["channel"] = channel_json(c.channel);
    j["bistochastic"] = c.bistochastic;
    j["asymptotic_rare_violation"] = c.bistochastic;
    return j;
}

Json rac_outcome_json(const RacOutcome& o) {
    Json j;
    j["bias"] = scalar_json(o.bias);
    j["probability"] = scalar_json(o.probability);
    Json enc = Json::array();
    for (const Channel& c : o.encodings) enc.push_back(channel_json(c));
    j["encodings"] = enc;
    Json st = Json::array();
    for (const Vec& v : o.encoded_states) st.push_back(vec_json(v));
    j["encoded_states"] = st;
    Json sc = Json::array();
    for (const Scalar& s : o.scores) sc.push_back(scalar_json(s));
    j["per_message_scores"] = sc;
    return j;
}

std::string channel_set_name(ChannelSet set) {
    switch (set) {
        case ChannelSet::rare: return "rare";
        case ChannelSet::bisto: return "bisto";
        case ChannelSet::full: return "full";
        case ChannelSet::explicit_list: return "explicit";
    }
    return "?";
}

ChannelSet channel_set_from_name(const std::string& name) {
    if (name == "rare") return ChannelSet::rare;
    if (name == "bisto") return ChannelSet::bisto;
    if (name == "full") return ChannelSet::full;
    if (name == "explicit") return ChannelSet::explicit_list;
    throw ParseError("unknown channel set '" + name + "' (rare|bisto|full|explicit)");
}

std::string resource_set_name(ResourceSet set) {
    return set == ResourceSet::bisto ? "bisto" : "rare";
}

ResourceSet resource_set_from_name(const std::string& name) {
    if (name == "bisto") return ResourceSet::bisto;
    if (name == "rare") return ResourceSet::rare;
    throw ParseError("unknown resource set '" + name + "' (bisto|rare)");
}

}  // namespace gptb

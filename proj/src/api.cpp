#include "gptb/api.hpp"

#include <charconv>
#include <sstream>

#include "gptb/errors.hpp"

namespace gptb::api {

namespace {

TwoCoordState parse_state(const std::string& p, const std::string& q, const Config& cfg) {
    return TwoCoordState(Scalar::parse(p, cfg.mode), Scalar::parse(q, cfg.mode));
}

std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace

Json model_info(const Json& model_desc, const Config& cfg) {
    Model m = model_from_descriptor(model_desc, cfg.mode);
    Json j;
    j["model"] = model_descriptor(m);
    j["mode"] = m.mode() == Scalar::Mode::exact ? "exact" : "float";
    j["dimension"] = m.dim();
    Json verts = Json::array();
    for (size_t i = 0; i < m.state_vertices().size(); ++i) {
        Json v;
        v["label"] = m.state_labels()[i];
        v["coords"] = vec_json(m.state_vertices()[i]);
        verts.push_back(v);
    }
    j["state_vertices"] = verts;
    j["mixed_state"] = vec_json(m.mixed_state());
    Json effs = Json::array();
    for (const Effect& e : m.effects()) {
        Json v;
        v["label"] = e.label;
        v["functional"] = vec_json(e.functional);
        effs.push_back(v);
    }
    j["extreme_effects"] = effs;
    if (!m.is_composite()) {
        Json fc = Json::array();
        for (const HalfSpace& h : m.state_polytope().halfspaces()) {
            Json f;
            f["normal"] = vec_json(h.normal);
            f["offset"] = scalar_json(h.offset);
            fc.push_back(f);
        }
        j["facets"] = fc;
    }
    return j;
}

Json channels_enumerate(const Json& model_desc, const Config& cfg, bool allow_large) {
    Model m = model_from_descriptor(model_desc, cfg.mode);
    ChannelEnumOptions opts;
    opts.allow_large = allow_large;
    opts.threads = cfg.parallelism;
    std::vector<Channel> found = enumerate_extreme_channels(m, opts);
    Json j;
    j["model"] = model_descriptor(m);
    j["count"] = found.size();
    Json arr = Json::array();
    for (const Channel& c : found) arr.push_back(channel_json(c));
    j["channels"] = arr;
    return j;
}

Json channel_check(const Json& channel, const Json& model_desc, const Config& cfg) {
    Model m = model_from_descriptor(model_desc, cfg.mode);
    Channel c = channel_from_json(channel, m.mode());
    Json j;
    j["channel"] = channel_json(c);
    j["model"] = model_descriptor(m);
    bool adm = is_admissible(c, m);
    if (!adm) {
        Json cls;
        cls["admissible"] = false;
        j["class"] = cls;
        return j;
    }
    ChannelEnumOptions opts;
    opts.threads = cfg.parallelism;
    j["class"] = channel_class_json(classify(c, m, opts));
    j["in_rare"] = membership_json(in_rare(c, m));
    j["in_bisto"] = membership_json(in_bisto(c, m, opts));
    return j;
}

Json birkhoff_gap_report(const Json& model_desc, const Config& cfg) {
    Model m = model_from_descriptor(model_desc, cfg.mode);
    ChannelEnumOptions opts;
    opts.threads = cfg.parallelism;
    std::vector<GapEntry> gap = birkhoff_gap(m, opts);
    Json j;
    j["model"] = model_descriptor(m);
    j["rare_vertex_count"] = reversible_channels(m).size();
    j["bisto_vertex_count"] = bisto_extreme_channels(m, opts).size();
    j["gap_count"] = gap.size();
    Json arr = Json::array();
    for (const GapEntry& g : gap) {
        Json e;
        e["channel"] = channel_json(g.channel);
        e["separating_functional"] = vec_json(g.separation.functional);
        e["threshold"] = scalar_json(g.separation.threshold);
        e["gap"] = scalar_json(g.separation.gap);
        arr.push_back(e);
    }
    j["gap"] = arr;
    return j;
}

Json birkhoff_certificate(const Json& channel, const Json& model_desc, const Config& cfg) {
    Model m = model_from_descriptor(model_desc, cfg.mode);
    Channel c = channel_from_json(channel, m.mode());
    Json j;
    j["channel"] = channel_json(c);
    auto cert = collision_certificate(c, m);
    j["certificate"] = cert ? collision_json(*cert) : Json(nullptr);
    return j;
}

Json rac_eval(const std::string& p, const std::string& q, const std::string& set,
              const Config& cfg) {
    TwoCoordState s = parse_state(p, q, cfg);
    ChannelSet cs = channel_set_from_name(set);
    RacInstance inst = RacInstance::standard(s, cs);
    RacOutcome lp = optimal_bias(inst);
    Json j;
    j["p"] = scalar_json(s.p);
    j["q"] = scalar_json(s.q);
    j["set"] = channel_set_name(cs);
    Json base = rac_outcome_json(lp);
    for (auto& [k, v] : base.items()) j[k] = v;
    if (cs == ChannelSet::rare || cs == ChannelSet::bisto) {
        auto canonical = cs == ChannelSet::rare ? canonical_rare_encodings(s)
                                                : canonical_bisto_encodings(s);
        RacOutcome can = evaluate_strategy(inst, canonical);
        j["canonical"] = rac_outcome_json(can);
        Scalar formula = cs == ChannelSet::rare ? rare_bias_formula(s) : bisto_bias_formula(s);
        j["closed_form_bias"] = scalar_json(formula);
    }
    return j;
}

std::string rac_sweep_csv(int steps, const Config& cfg) {
    if (steps < 1) throw DomainError("sweep needs at least one step");
    std::ostringstream os;
    os << "p,q,bias_rare,bias_bisto\n";
    for (int i = 0; i <= steps; ++i) {
        for (int jq = 0; jq <= steps; ++jq) {
            TwoCoordState s = cfg.mode == Scalar::Mode::exact
                                  ? TwoCoordState(Scalar::exact(i, steps), Scalar::exact(jq, steps))
                                  : TwoCoordState(Scalar::real(double(i) / steps),
                                                  Scalar::real(double(jq) / steps));
            RacOutcome rare = optimal_bias(RacInstance::standard(s, ChannelSet::rare));
            RacOutcome bisto = optimal_bias(RacInstance::standard(s, ChannelSet::bisto));
            os << fmt_double(s.p.to_double()) << ',' << fmt_double(s.q.to_double()) << ','
               << fmt_double(rare.bias.to_double()) << ',' << fmt_double(bisto.bias.to_double())
               << '\n';
        }
    }
    return os.str();
}

Json convert_check(const std::string& from_p, const std::string& from_q,
                   const std::string& to_p, const std::string& to_q, const std::string& set,
                   const Config& cfg) {
    TwoCoordState a = parse_state(from_p, from_q, cfg);
    TwoCoordState b = parse_state(to_p, to_q, cfg);
    ResourceSet rs = resource_set_from_name(set);
    bool criterion = rs == ResourceSet::bisto ? convertible_bisto(a, b) : convertible_rare(a, b);
    bool oracle = convertible_oracle(a, b, rs);
    Json j;
    j["from"] = {{"p", scalar_json(a.p)}, {"q", scalar_json(a.q)}};
    j["to"] = {{"p", scalar_json(b.p)}, {"q", scalar_json(b.q)}};
    j["set"] = resource_set_name(rs);
    j["convertible"] = criterion;
    j["oracle_agrees"] = criterion == oracle;
    return j;
}

Json reachable(const std::string& p, const std::string& q, const std::string& set,
               const Config& cfg) {
    TwoCoordState s = parse_state(p, q, cfg);
    ResourceSet rs = resource_set_from_name(set);
    std::vector<Vec> verts = reachable_vertices(s, rs);
    Json j;
    j["p"] = scalar_json(s.p);
    j["q"] = scalar_json(s.q);
    j["set"] = resource_set_name(rs);
    Json arr = Json::array();
    for (const Vec& v : verts) arr.push_back(vec_json(v));
    j["vertices"] = arr;
    return j;
}

Json entropy_report(const std::string& p, const std::string& q, const Config& cfg) {
    TwoCoordState s = parse_state(p, q, cfg);
    Json j;
    j["p"] = scalar_json(s.p);
    j["q"] = scalar_json(s.q);
    j["s_vn"] = s_vn(s);
    j["s_tot"] = s_tot(s);
    return j;
}

Json tensor_act(const std::vector<Json>& channels, const Json& state, const Config& cfg) {
    if (channels.empty()) throw DomainError("tensor action needs at least one channel");
    std::vector<Channel> parts;
    for (const Json& c : channels) parts.push_back(channel_from_json(c, cfg.mode));
    Channel t = tensor_channel(parts);

    auto in_mode = [&](const Vec& v) {
        if (cfg.mode == Scalar::Mode::exact) return v;
        std::vector<Scalar> c;
        for (size_t i = 0; i < v.dim(); ++i) c.push_back(Scalar::real(v[i].to_double()));
        return Vec(std::move(c));
    };
    Vec input = [&]() -> Vec {
        if (state.is_string()) {
            std::string name = state.get<std::string>();
            if (name == "entangled" || name == "ent") return in_mode(pr_entangled_state());
            throw ParseError("unknown named state '" + name + "' (only 'entangled')");
        }
        if (state.is_object() && state.contains("product")) {
            Vec acc = Vec({Scalar::one(cfg.mode)});
            for (const auto& f : state["product"]) acc = kron(acc, vec_from_json(f, cfg.mode));
            return acc;
        }
        return vec_from_json(state, cfg.mode);
    }();
    if (input.dim() != t.dim())
        throw DimensionError("state dimension does not match the tensor channel");

    Json j;
    Json cs = Json::array();
    for (const Channel& c : parts) cs.push_back(channel_json(c));
    j["channels"] = cs;
    j["input"] = vec_json(input);
    j["output"] = vec_json(t.apply(input));
    return j;
}

Json verify_report(const Config& cfg) {
    std::vector<CriterionReport> reports = run_acceptance(cfg);
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : reports) {
        Json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["details"] = r.details;
        e["seconds"] = r.seconds;
        arr.push_back(e);
        all = all && r.passed;
    }
    Json j;
    j["criteria"] = arr;
    j["all_passed"] = all;
    return j;
}

}  // namespace gptb::api

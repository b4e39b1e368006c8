#include "gptb/rac.hpp"

#include <cmath>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

Vec gamma_vec(unsigned axis, int sign, Scalar::Mode mode) {
    Vec v = Vec::unit(3, axis - 1, mode);
    return sign > 0 ? v : -v;
}

Channel named(unsigned i, int si, unsigned j, int sj, Scalar::Mode m) {
    return Channel::from_rows(gamma_vec(i, si, m), gamma_vec(j, sj, m));
}

Channel convex_mix(const std::vector<Scalar>& weights, const std::vector<Channel>& parts) {
    if (weights.size() != parts.size() || parts.empty())
        throw DimensionError("convex_mix: weight/channel count mismatch");
    Mat acc = weights[0] * parts[0].matrix();
    for (size_t i = 1; i < parts.size(); ++i) acc = acc + weights[i] * parts[i].matrix();
    return Channel::from_matrix(std::move(acc));
}

Model square_model(Scalar::Mode mode) { return Model::evengon(2, mode); }

}  // namespace

RacInstance RacInstance::standard(TwoCoordState state, ChannelSet set) {
    Model sq = square_model(state.mode());
    RacInstance inst{std::move(state), set, {}, measurement_m13(sq), measurement_m24(sq)};
    return inst;
}

RacInstance RacInstance::with_vertices(TwoCoordState state, std::vector<Channel> vertices) {
    RacInstance inst = standard(std::move(state), ChannelSet::explicit_list);
    inst.explicit_vertices = std::move(vertices);
    return inst;
}

std::vector<Channel> channel_set_vertices(const RacInstance& inst) {
    Scalar::Mode m = inst.initial.mode();
    switch (inst.set) {
        case ChannelSet::explicit_list:
            if (inst.explicit_vertices.empty())
                throw DomainError("explicit channel set is empty");
            return inst.explicit_vertices;
        case ChannelSet::rare:
            return reversible_channels(square_model(m));
        case ChannelSet::bisto: {
            std::vector<Channel> out;
            for (unsigned i : {1u, 2u})
                for (int si : {+1, -1})
                    for (unsigned j : {1u, 2u})
                        for (int sj : {+1, -1}) out.push_back(named(i, si, j, sj, m));
            return out;
        }
        case ChannelSet::full: {
            std::vector<Channel> out;
            for (unsigned i : {1u, 2u, 3u})
                for (int si : {+1, -1})
                    for (unsigned j : {1u, 2u, 3u})
                        for (int sj : {+1, -1}) out.push_back(named(i, si, j, sj, m));
            return out;
        }
    }
    throw DomainError("unknown channel set");
}

namespace {

struct ScoreContext {
    Vec state;              // referee state vector
    std::vector<Vec> dec;   // effect per (y, bit): dec[2*y + bit]
};

ScoreContext make_context(const RacInstance& inst) {
    if (inst.decode0.effects.size() != 2 || inst.decode1.effects.size() != 2)
        throw DomainError("decoding measurements must be two-outcome");
    Model sq = square_model(inst.initial.mode());
    validate_measurement(inst.decode0, sq);
    validate_measurement(inst.decode1, sq);
    ScoreContext ctx{inst.initial.state_vector(),
                     {inst.decode0.effects[0].functional, inst.decode0.effects[1].functional,
                      inst.decode1.effects[0].functional, inst.decode1.effects[1].functional}};
    return ctx;
}

// Recentred score of one (message, question) pair for a given encoded state.
Scalar score_of(const ScoreContext& ctx, size_t msg, size_t y, const Vec& encoded) {
    size_t bit = y == 0 ? (msg >> 1) : (msg & 1);  // msg = 2*x0 + x1
    const Vec& effect = ctx.dec[2 * y + bit];
    return 2 * dot(effect, encoded) - 1;
}

}  // namespace

RacOutcome evaluate_strategy(const RacInstance& inst, const std::vector<Channel>& encodings) {
    if (encodings.size() != 4) throw DimensionError("a strategy has one encoding per message");
    ScoreContext ctx = make_context(inst);
    std::vector<Vec> set_points;
    for (const Channel& c : channel_set_vertices(inst)) set_points.push_back(c.as_point());
    for (const Channel& e : encodings)
        if (!hull_contains(e.as_point(), set_points))
            throw DomainError("encoding lies outside the declared channel set");

    RacOutcome out{Scalar::zero(inst.initial.mode()), Scalar::zero(inst.initial.mode()), encodings, {}, {}};
    for (size_t msg = 0; msg < 4; ++msg) out.encoded_states.push_back(encodings[msg].apply(ctx.state));
    bool first = true;
    for (size_t msg = 0; msg < 4; ++msg)
        for (size_t y = 0; y < 2; ++y) {
            Scalar s = score_of(ctx, msg, y, out.encoded_states[msg]);
            if (first || s < out.bias) out.bias = s;
            first = false;
            out.scores.push_back(std::move(s));
        }
    out.probability = (out.bias + 1) / 2;
    return out;
}

std::vector<Channel> canonical_rare_encodings(const TwoCoordState& state) {
    Scalar::Mode m = state.mode();
    FoldResult fold = fold_to_first_quadrant(state);
    const Channel& F = fold.used;
    Scalar half = Scalar::one(m) / 2;
    Channel id = named(1, +1, 2, +1, m);
    Channel swap = named(2, +1, 1, +1, m);       // (x,y) -> (y,x)
    Channel ccw = named(2, -1, 1, +1, m);        // (x,y) -> (-y,x)
    Channel xrefl = named(1, -1, 2, +1, m);      // (x,y) -> (-x,y)
    Channel cw = named(2, +1, 1, -1, m);         // (x,y) -> (y,-x)
    Channel yrefl = named(1, +1, 2, -1, m);      // (x,y) -> (x,-y)
    Channel rotpi = named(1, -1, 2, -1, m);      // (x,y) -> (-x,-y)
    Channel antiswap = named(2, -1, 1, -1, m);   // (x,y) -> (-y,-x)
    std::vector<Scalar> hh{half, half};
    return {
        convex_mix(hh, {id, swap}) * F,        // 00 -> (+a, +a)
        convex_mix(hh, {ccw, xrefl}) * F,      // 01 -> (-a, +a)
        convex_mix(hh, {cw, yrefl}) * F,       // 10 -> (+a, -a)
        convex_mix(hh, {rotpi, antiswap}) * F  // 11 -> (-a, -a)
    };
}

std::vector<Channel> canonical_bisto_encodings(const TwoCoordState& state) {
    Scalar::Mode m = state.mode();
    FoldResult fold = fold_to_first_quadrant(state);
    const Channel& F = fold.used;
    // Collapse onto the coordinate with the larger folded weight.
    bool use_y = fold.state.q >= fold.state.p;
    Channel collapse = use_y ? named(2, +1, 2, +1, m) : named(1, +1, 1, +1, m);
    Channel base = collapse * F;
    return {
        named(1, +1, 2, +1, m) * base,  // 00 -> (+b, +b)
        named(2, -1, 1, +1, m) * base,  // 01 -> (-b, +b)
        named(2, +1, 1, -1, m) * base,  // 10 -> (+b, -b)
        named(1, -1, 2, -1, m) * base   // 11 -> (-b, -b)
    };
}

RacOutcome optimal_bias(const RacInstance& inst) {
    ScoreContext ctx = make_context(inst);
    std::vector<Channel> verts = channel_set_vertices(inst);
    const size_t n = verts.size();
    const Scalar::Mode m = inst.initial.mode();
    const Scalar zero = Scalar::zero(m), one = Scalar::one(m);

    // Each encoding is scored by exactly two of the eight terms, disjoint
    // across messages, so the four messages optimize independently.
    std::vector<Vec> images;
    images.reserve(n);
    for (const Channel& v : verts) images.push_back(v.apply(ctx.state));

    RacOutcome out{zero, zero, {}, {}, {}};
    bool first = true;
    LpOptions lopts{1e-9, 1000000};
    for (size_t msg = 0; msg < 4; ++msg) {
        // Variables (λ_1..λ_n, t): maximize t with both scores >= t.
        std::vector<LinConstraint> rows;
        for (size_t y = 0; y < 2; ++y) {
            std::vector<Scalar> coeff;
            coeff.reserve(n + 1);
            for (size_t i = 0; i < n; ++i) coeff.push_back(-score_of(ctx, msg, y, images[i]));
            coeff.push_back(one);
            rows.push_back({Vec(std::move(coeff)), Rel::le, zero});
        }
        {
            std::vector<Scalar> coeff(n, one);
            coeff.push_back(zero);
            rows.push_back({Vec(std::move(coeff)), Rel::eq, one});
        }
        std::vector<Scalar> obj(n, zero);
        obj.push_back(one);
        std::vector<bool> nonneg(n + 1, true);
        nonneg[n] = false;
        LpResult r = lp_maximize(rows, Vec(std::move(obj)), nonneg, lopts);
        if (r.status != LpStatus::optimal) throw Error("per-message RAC LP failed");
        std::vector<Scalar> lambda(r.x->coords().begin(),
                                   r.x->coords().begin() + static_cast<std::ptrdiff_t>(n));
        out.encodings.push_back(convex_mix(lambda, verts));
        if (first || *r.value < out.bias) out.bias = *r.value;
        first = false;
    }
    for (size_t msg = 0; msg < 4; ++msg) {
        out.encoded_states.push_back(out.encodings[msg].apply(ctx.state));
        for (size_t y = 0; y < 2; ++y)
            out.scores.push_back(score_of(ctx, msg, y, out.encoded_states[msg]));
    }
    out.probability = (out.bias + 1) / 2;
    return out;
}

Scalar rare_bias_formula(const TwoCoordState& state) {
    Scalar a = (2 * state.p - 1).abs();
    Scalar b = (2 * state.q - 1).abs();
    return (a + b) / 2;
}

Scalar bisto_bias_formula(const TwoCoordState& state) {
    Scalar a = (2 * state.p - 1).abs();
    Scalar b = (2 * state.q - 1).abs();
    return a > b ? a : b;
}

double qubit_reference_probability() { return 0.5 * (1.0 + 1.0 / std::sqrt(2.0)); }

}  // namespace gptb

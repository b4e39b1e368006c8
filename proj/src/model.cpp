#include "gptb/model.hpp"

#include <cmath>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

Scalar sc(long long n, long long d = 1) { return Scalar::exact(n, d); }

std::vector<Vec> square_vertices() {
    return {vec3(sc(1), sc(1), sc(1)), vec3(sc(1), sc(-1), sc(1)),
            vec3(sc(-1), sc(-1), sc(1)), vec3(sc(-1), sc(1), sc(1))};
}

}  // namespace

Model Model::evengon(unsigned k, std::optional<Scalar::Mode> mode) {
    if (k < 2) throw DomainError("evengon requires k >= 2");
    Scalar::Mode m = mode.value_or(k == 2 ? Scalar::Mode::exact : Scalar::Mode::real);
    if (k > 2 && m == Scalar::Mode::exact)
        throw DomainError("evengon coordinates are irrational for k > 2; use float mode");

    Model md;
    md.k_ = k;
    md.dim_ = 3;
    md.mode_ = m;

    std::vector<HalfSpace> facets;
    if (k == 2 && m == Scalar::Mode::exact) {
        md.vertices_ = square_vertices();
        // Facet i joins w_i and w_{i+1}.
        facets.push_back(make_halfspace(vec3(sc(1), sc(0), sc(0)), sc(1)));
        facets.push_back(make_halfspace(vec3(sc(0), sc(-1), sc(0)), sc(1)));
        facets.push_back(make_halfspace(vec3(sc(-1), sc(0), sc(0)), sc(1)));
        facets.push_back(make_halfspace(vec3(sc(0), sc(1), sc(0)), sc(1)));
        facets.push_back(make_halfspace(vec3(sc(0), sc(0), sc(1)), sc(1)));
        facets.push_back(make_halfspace(vec3(sc(0), sc(0), sc(-1)), sc(-1)));
    } else if (k == 2) {
        for (const Vec& v : square_vertices())
            md.vertices_.push_back(vec3(Scalar::real(v[0].to_double()),
                                        Scalar::real(v[1].to_double()), Scalar::real(1.0)));
        auto R = [](double x) { return Scalar::real(x); };
        facets.push_back(make_halfspace(vec3(R(1), R(0), R(0)), R(1)));
        facets.push_back(make_halfspace(vec3(R(0), R(-1), R(0)), R(1)));
        facets.push_back(make_halfspace(vec3(R(-1), R(0), R(0)), R(1)));
        facets.push_back(make_halfspace(vec3(R(0), R(1), R(0)), R(1)));
        facets.push_back(make_halfspace(vec3(R(0), R(0), R(1)), R(1)));
        facets.push_back(make_halfspace(vec3(R(0), R(0), R(-1)), R(-1)));
    } else {
        auto R = [](double x) { return Scalar::real(x); };
        for (unsigned i = 1; i <= 2 * k; ++i) {
            double a = M_PI * i / k;
            md.vertices_.push_back(vec3(R(std::cos(a)), R(std::sin(a)), R(1.0)));
        }
        double inradius = std::cos(M_PI / (2.0 * k));
        for (unsigned i = 1; i <= 2 * k; ++i) {
            double a = M_PI * (i + 0.5) / k;
            facets.push_back(make_halfspace(vec3(R(std::cos(a)), R(std::sin(a)), R(0.0)),
                                            R(inradius)));
        }
        facets.push_back(make_halfspace(vec3(R(0), R(0), R(1)), R(1)));
        facets.push_back(make_halfspace(vec3(R(0), R(0), R(-1)), R(-1)));
    }
    for (unsigned i = 0; i < 2 * k; ++i) md.labels_.push_back("w" + std::to_string(i + 1));
    md.polytope_ = Polytope::from_both(md.vertices_, facets, md.eps_);
    md.mixed_ = vec3(Scalar::zero(m), Scalar::zero(m), Scalar::one(m));

    // Facet-normalized effects: zero on the facet, one on the opposite one.
    // For the square these are exactly e1..e4; keep those labels.
    const Scalar half = k == 2 && m == Scalar::Mode::exact ? sc(1, 2) : Scalar::real(0.5);
    md.effects_.push_back({Vec::zeros(3, m), k == 2 ? "e0" : "zero"});
    std::vector<Effect> facet_effects;
    for (unsigned i = 0; i < 2 * k; ++i) {
        const HalfSpace& f = facets[i];
        Scalar fx = -(half * f.normal[0]) / f.offset;
        Scalar fy = -(half * f.normal[1]) / f.offset;
        facet_effects.push_back({vec3(fx, fy, half), "f" + std::to_string(i + 1)});
    }
    if (k == 2) {
        // Fig-order labels: e1 reads +y, e2 +x, e3 -y, e4 -x.
        facet_effects[1].label = "e1";
        facet_effects[2].label = "e2";
        facet_effects[3].label = "e3";
        facet_effects[0].label = "e4";
        md.effects_.push_back(facet_effects[1]);
        md.effects_.push_back(facet_effects[2]);
        md.effects_.push_back(facet_effects[3]);
        md.effects_.push_back(facet_effects[0]);
    } else {
        for (auto& e : facet_effects) md.effects_.push_back(std::move(e));
    }
    md.effects_.push_back({vec3(Scalar::zero(m), Scalar::zero(m), Scalar::one(m)),
                           k == 2 ? "e5" : "u"});
    return md;
}

Model Model::composite(std::vector<Model> factors) {
    if (factors.empty()) throw DomainError("composite requires at least one factor");
    if (factors.size() == 1) return factors.front();
    for (const Model& f : factors)
        if (f.is_composite()) throw DomainError("composite factors must be single systems");

    Model md;
    md.mode_ = factors.front().mode();
    for (const Model& f : factors)
        if (f.mode() != md.mode_) throw ScalarModeError("composite factors must share a scalar mode");

    md.dim_ = 1;
    for (const Model& f : factors) md.dim_ *= f.dim();

    std::vector<Vec> verts{Vec({Scalar::one(md.mode_)})};
    std::vector<std::string> labels{""};
    Vec mixed({Scalar::one(md.mode_)});
    std::vector<Effect> effs{{Vec({Scalar::one(md.mode_)}), ""}};
    for (const Model& f : factors) {
        std::vector<Vec> nverts;
        std::vector<std::string> nlabels;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < f.state_vertices().size(); ++j) {
                nverts.push_back(kron(verts[i], f.state_vertices()[j]));
                nlabels.push_back(labels[i].empty() ? f.state_labels()[j]
                                                    : labels[i] + "*" + f.state_labels()[j]);
            }
        verts = std::move(nverts);
        labels = std::move(nlabels);
        mixed = kron(mixed, f.mixed_state());
        std::vector<Effect> neffs;
        for (const Effect& a : effs)
            for (const Effect& b : f.effects())
                neffs.push_back({kron(a.functional, b.functional),
                                 a.label.empty() ? b.label : a.label + "*" + b.label});
        effs = std::move(neffs);
    }
    md.vertices_ = std::move(verts);
    md.labels_ = std::move(labels);
    md.mixed_ = std::move(mixed);
    md.polytope_ = Polytope::from_vertices(md.vertices_, md.eps_);
    // Product effects only; entangled extreme effects of the minimal tensor
    // product are not representable here. Keep zero first, unit last.
    std::vector<Effect> ordered;
    for (auto& e : effs) {
        bool is_zero = true, is_unit = true;
        for (size_t i = 0; i < e.functional.dim(); ++i) {
            if (!e.functional[i].is_zero()) is_zero = false;
            Scalar want = i + 1 == e.functional.dim() ? Scalar::one(md.mode_) : Scalar::zero(md.mode_);
            if (e.functional[i] != want) is_unit = false;
        }
        if (!is_zero && !is_unit) ordered.push_back(std::move(e));
    }
    md.effects_.push_back({Vec::zeros(md.dim_, md.mode_), "zero"});
    for (auto& e : ordered) md.effects_.push_back(std::move(e));
    md.effects_.push_back({Vec::unit(md.dim_, md.dim_ - 1, md.mode_), "u"});
    md.factors_ = std::move(factors);
    return md;
}

unsigned Model::gon_k() const {
    if (is_composite()) throw DomainError("composite model has no gon order");
    return k_;
}

const Effect& Model::effect(const std::string& label) const {
    for (const Effect& e : effects_)
        if (e.label == label) return e;
    throw DomainError("no effect labeled '" + label + "'");
}

std::optional<size_t> Model::vertex_index(const Vec& point) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (eq_within(vertices_[i], point, eps_)) return i;
    return std::nullopt;
}

void validate_measurement(const Measurement& m, const Model& owner) {
    if (m.effects.empty()) throw DomainError("measurement needs at least one effect");
    Vec sum = Vec::zeros(owner.dim(), owner.mode());
    for (const Effect& e : m.effects) {
        sum = sum + e.functional;
        for (const Vec& w : owner.state_vertices()) {
            Scalar v = dot(e.functional, w);
            if (!leq_within(Scalar::zero(owner.mode()), v, owner.eps()) ||
                !leq_within(v, Scalar::one(owner.mode()), owner.eps()))
                throw DomainError("measurement effect outside [0,1] on a state vertex");
        }
    }
    if (!eq_within(sum, owner.unit_effect().functional, owner.eps()))
        throw DomainError("measurement effects do not sum to the unit effect");
}

Measurement measurement_m13(const Model& square) {
    return Measurement{{square.effect("e1"), square.effect("e3")}};
}

Measurement measurement_m24(const Model& square) {
    return Measurement{{square.effect("e2"), square.effect("e4")}};
}

TwoCoordState::TwoCoordState(Scalar p_, Scalar q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p.mode() != q.mode()) throw ScalarModeError("state coordinates must share a mode");
    Scalar zero = Scalar::zero(p.mode()), one = Scalar::one(p.mode());
    if (!leq_within(zero, p, 1e-9) || !leq_within(p, one, 1e-9) ||
        !leq_within(zero, q, 1e-9) || !leq_within(q, one, 1e-9))
        throw DomainError("state coordinates must lie in [0,1]");
}

TwoCoordState TwoCoordState::from_vector(const Vec& state) {
    if (state.dim() != 3) throw DimensionError("two-coordinate state must have dimension 3");
    if (!eq_within(state[2], Scalar::one(state.mode()), 1e-9))
        throw DomainError("state vector is not normalized");
    return TwoCoordState((state[0] + 1) / 2, (state[1] + 1) / 2);
}

Vec TwoCoordState::state_vector() const {
    return vec3(2 * p - 1, 2 * q - 1, Scalar::one(mode()));
}

Vec pr_entangled_state() {
    auto w = square_vertices();
    Scalar half = sc(1, 2);
    Vec v = kron(w[0], w[1]) - kron(w[1], w[1]) + kron(w[1], w[2]) + kron(w[2], w[0]);
    return half * v;
}

Vec marginal(const Vec& state, size_t keep_factor) {
    if (state.dim() != 9) throw DimensionError("marginal expects a two-square state");
    std::vector<Scalar> c;
    if (keep_factor == 0) {
        for (size_t i = 0; i < 3; ++i) c.push_back(state[3 * i + 2]);
    } else if (keep_factor == 1) {
        for (size_t j = 0; j < 3; ++j) c.push_back(state[6 + j]);
    } else {
        throw DomainError("keep_factor must be 0 or 1");
    }
    return Vec(std::move(c));
}

}  // namespace gptb

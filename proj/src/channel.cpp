#include "gptb/channel.hpp"

#include <algorithm>
#include <cmath>

#include "gptb/errors.hpp"
#include "gptb/linsolve.hpp"

namespace gptb {

namespace {

void require_normalization_row(const Mat& m, double eps) {
    if (m.rows() != m.cols()) throw DimensionError("channel matrix must be square");
    size_t n = m.cols();
    for (size_t j = 0; j < n; ++j) {
        Scalar want = j + 1 == n ? Scalar::one(m.mode()) : Scalar::zero(m.mode());
        if (!eq_within(m.at(n - 1, j), want, eps))
            throw DomainError("channel matrix last row must be (0,...,0,1)");
    }
}

}  // namespace

Channel Channel::from_rows(Vec r, Vec s) {
    if (r.dim() != 3 || s.dim() != 3) throw DimensionError("channel rows must have dimension 3");
    Scalar::Mode m = r.mode();
    std::vector<Scalar> a;
    for (size_t j = 0; j < 3; ++j) a.push_back(r[j]);
    for (size_t j = 0; j < 3; ++j) a.push_back(s[j]);
    a.push_back(Scalar::zero(m));
    a.push_back(Scalar::zero(m));
    a.push_back(Scalar::one(m));
    return Channel(Mat(3, 3, std::move(a)));
}

Channel Channel::from_matrix(Mat m) {
    require_normalization_row(m, 1e-9);
    return Channel(std::move(m));
}

Channel Channel::identity(size_t dim, Scalar::Mode mode) {
    return Channel(Mat::identity(dim, mode));
}

Channel Channel::from_point(const Vec& point) {
    if (point.dim() != 6) throw DimensionError("channel point must have dimension 6");
    std::vector<Scalar> r, s;
    for (size_t j = 0; j < 3; ++j) r.push_back(point[j]);
    for (size_t j = 0; j < 3; ++j) s.push_back(point[3 + j]);
    return from_rows(Vec(std::move(r)), Vec(std::move(s)));
}

Vec Channel::r() const {
    if (dim() != 3) throw DimensionError("r() is defined for single-system channels");
    return m_.row(0);
}

Vec Channel::s() const {
    if (dim() != 3) throw DimensionError("s() is defined for single-system channels");
    return m_.row(1);
}

Vec Channel::as_point() const {
    if (dim() != 3) throw DimensionError("as_point() is defined for single-system channels");
    std::vector<Scalar> c;
    for (size_t j = 0; j < 3; ++j) c.push_back(m_.at(0, j));
    for (size_t j = 0; j < 3; ++j) c.push_back(m_.at(1, j));
    return Vec(std::move(c));
}

Vec Channel::apply(const Vec& state) const { return m_.apply(state); }

Channel operator*(const Channel& a, const Channel& b) { return Channel(a.m_ * b.m_); }

Channel tensor_channel(const std::vector<Channel>& parts) {
    if (parts.empty()) throw DomainError("tensor_channel of an empty list");
    Mat m = parts.front().matrix();
    for (size_t i = 1; i < parts.size(); ++i) m = kron(m, parts[i].matrix());
    return Channel::from_matrix(std::move(m));
}

bool eq_within(const Channel& a, const Channel& b, double eps) {
    return eq_within(a.matrix(), b.matrix(), eps);
}

namespace {

Vec gamma_vec(unsigned axis, int sign, Scalar::Mode mode) {
    Vec v = Vec::unit(3, axis - 1, mode);
    return sign > 0 ? v : -v;
}

}  // namespace

Channel parse_channel_name(const std::string& name, Scalar::Mode mode) {
    std::string t;
    for (char ch : name)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t == "id" || t == "identity") return Channel::identity(3, mode);
    // Accept the UTF-8 gamma as a synonym for 'g'.
    auto parse_gamma = [&](const std::string& tok) -> Vec {
        std::string body = tok;
        const std::string gamma = "γ";
        if (body.rfind(gamma, 0) == 0) body = "g" + body.substr(gamma.size());
        if (body.size() != 3 || body[0] != 'g' || body[1] < '1' || body[1] > '3' ||
            (body[2] != '+' && body[2] != '-'))
            throw ParseError("bad channel token '" + tok + "' (expected g<1-3><+|->)");
        return gamma_vec(static_cast<unsigned>(body[1] - '0'), body[2] == '+' ? 1 : -1, mode);
    };
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("bad channel name '" + name + "' (expected [g1+,g2-] or id)");
    std::string inner = t.substr(1, t.size() - 2);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("bad channel name '" + name + "'");
    return Channel::from_rows(parse_gamma(inner.substr(0, comma)),
                              parse_gamma(inner.substr(comma + 1)));
}

std::optional<std::string> channel_name(const Channel& c, double eps) {
    if (c.dim() != 3) return std::nullopt;
    auto match = [&](const Vec& row) -> std::optional<std::string> {
        for (unsigned axis = 1; axis <= 3; ++axis)
            for (int sign : {+1, -1})
                if (eq_within(row, gamma_vec(axis, sign, row.mode()), eps))
                    return "g" + std::to_string(axis) + (sign > 0 ? "+" : "-");
        return std::nullopt;
    };
    auto rn = match(c.r());
    auto sn = match(c.s());
    if (!rn || !sn) return std::nullopt;
    return "[" + *rn + "," + *sn + "]";
}

bool is_admissible(const Channel& t, const Model& m) {
    if (m.is_composite()) throw DomainError("admissibility check expects a single-system model");
    if (t.dim() != m.dim()) throw DimensionError("channel/model dimension mismatch");
    for (const Vec& w : m.state_vertices())
        if (!m.state_polytope().contains(t.apply(w), m.eps())) return false;
    return true;
}

std::vector<HalfSpace> channel_hrep(const Model& m) {
    if (m.is_composite()) throw DomainError("channel H-rep expects a single-system model");
    std::vector<HalfSpace> rows;
    for (const HalfSpace& f : m.state_polytope().halfspaces()) {
        // Facets that only touch the normalization coordinate put no
        // constraint on [r, s].
        if (f.normal[0].is_zero() && f.normal[1].is_zero()) continue;
        for (const Vec& w : m.state_vertices()) {
            std::vector<Scalar> n;
            n.reserve(6);
            for (size_t j = 0; j < 3; ++j) n.push_back(f.normal[0] * w[j]);
            for (size_t j = 0; j < 3; ++j) n.push_back(f.normal[1] * w[j]);
            rows.push_back(make_halfspace(Vec(std::move(n)), f.offset - f.normal[2]));
        }
    }
    return rows;
}

std::vector<Channel> enumerate_extreme_channels(const Model& m, const ChannelEnumOptions& opts) {
    unsigned k = m.gon_k();
    if (k > 4 && !opts.allow_large)
        throw EnumerationCapError(
            "extreme-channel enumeration for k > 4 walks C(4k^2,6) subsets; "
            "pass allow_large to override");
    EnumerateOptions eo;
    eo.eps = m.eps();
    eo.threads = opts.threads;
    std::vector<Vec> points = enumerate_vertices(channel_hrep(m), 6, eo);
    std::vector<Channel> out;
    out.reserve(points.size());
    for (const Vec& p : points) out.push_back(Channel::from_point(p));
    return out;
}

std::vector<Channel> reversible_channels(const Model& m) {
    unsigned k = m.gon_k();
    std::vector<Channel> out;
    if (k == 2 && m.mode() == Scalar::Mode::exact) {
        auto g = [&](unsigned a, int s) { return gamma_vec(a, s, Scalar::Mode::exact); };
        // Rotations by 0, pi/2, pi, 3pi/2; reflections across the axes and
        // both diagonals.
        out.push_back(Channel::from_rows(g(1, +1), g(2, +1)));
        out.push_back(Channel::from_rows(g(2, -1), g(1, +1)));
        out.push_back(Channel::from_rows(g(1, -1), g(2, -1)));
        out.push_back(Channel::from_rows(g(2, +1), g(1, -1)));
        out.push_back(Channel::from_rows(g(1, +1), g(2, -1)));
        out.push_back(Channel::from_rows(g(2, +1), g(1, +1)));
        out.push_back(Channel::from_rows(g(1, -1), g(2, +1)));
        out.push_back(Channel::from_rows(g(2, -1), g(1, -1)));
        return out;
    }
    auto R = [](double x) { return Scalar::real(x); };
    for (unsigned j = 0; j < 2 * k; ++j) {
        double a = M_PI * j / k;
        out.push_back(Channel::from_rows(vec3(R(std::cos(a)), R(-std::sin(a)), R(0)),
                                         vec3(R(std::sin(a)), R(std::cos(a)), R(0))));
    }
    for (unsigned j = 0; j < 2 * k; ++j) {
        double a = M_PI * j / k;  // reflection across the line at angle a/2
        out.push_back(Channel::from_rows(vec3(R(std::cos(a)), R(std::sin(a)), R(0)),
                                         vec3(R(std::sin(a)), R(-std::cos(a)), R(0))));
    }
    return out;
}

std::vector<Channel> bisto_extreme_channels(const Model& m, const ChannelEnumOptions& opts) {
    unsigned k = m.gon_k();
    if (k > 6 && !opts.allow_large)
        throw EnumerationCapError("bistochastic-vertex enumeration capped at k = 6; pass allow_large");
    // Substitute r3 = s3 = 0: drop those two columns from the channel H-rep.
    std::vector<HalfSpace> reduced;
    for (const HalfSpace& h : channel_hrep(m)) {
        std::vector<Scalar> n{h.normal[0], h.normal[1], h.normal[3], h.normal[4]};
        bool zero = true;
        for (const Scalar& x : n)
            if (!x.is_zero()) zero = false;
        if (zero) continue;
        reduced.push_back(make_halfspace(Vec(std::move(n)), h.offset));
    }
    EnumerateOptions eo;
    eo.eps = m.eps();
    eo.threads = opts.threads;
    std::vector<Vec> points = enumerate_vertices(reduced, 4, eo);
    std::vector<Channel> out;
    const Scalar zero = Scalar::zero(m.mode());
    for (const Vec& p : points)
        out.push_back(Channel::from_rows(vec3(p[0], p[1], zero), vec3(p[2], p[3], zero)));
    return out;
}

ChannelClass classify(const Channel& t, const Model& m, const ChannelEnumOptions& opts) {
    ChannelClass c;
    c.admissible = is_admissible(t, m);
    if (!c.admissible) throw DomainError("classify expects an admissible channel");

    // Reversible <=> the channel permutes the extreme states bijectively.
    const auto& vs = m.state_vertices();
    std::vector<bool> hit(vs.size(), false);
    c.reversible = true;
    for (const Vec& w : vs) {
        auto idx = m.vertex_index(t.apply(w));
        if (!idx || hit[*idx]) {
            c.reversible = false;
            break;
        }
        hit[*idx] = true;
    }

    c.bistochastic = eq_within(t.apply(m.mixed_state()), m.mixed_state(), m.eps());

    // Extreme <=> the tight facets of the channel polytope span R^6.
    std::vector<Vec> tight_normals;
    Vec point = t.as_point();
    for (const HalfSpace& h : channel_hrep(m))
        if (tight(h, point, m.eps())) tight_normals.push_back(h.normal);
    c.extreme = tight_normals.size() >= 6 && rank_of(tight_normals, m.eps()) == 6;

    // Measure-and-prepare = mixture of the non-reversible extreme channels
    // (each of those is a measure-and-prepare map, and the class is convex).
    if (c.reversible) {
        c.measure_and_prepare = false;
    } else {
        std::vector<Channel> storage;
        const std::vector<Channel>* ext = opts.extreme_hint;
        if (!ext) {
            if (m.gon_k() == 2 && m.mode() == Scalar::Mode::exact) {
                // The square's vertex set is the 6x6 gamma table; no need
                // to re-enumerate it per call.
                for (unsigned i : {1u, 2u, 3u})
                    for (int si : {+1, -1})
                        for (unsigned j : {1u, 2u, 3u})
                            for (int sj : {+1, -1})
                                storage.push_back(Channel::from_rows(
                                    gamma_vec(i, si, Scalar::Mode::exact),
                                    gamma_vec(j, sj, Scalar::Mode::exact)));
            } else {
                storage = enumerate_extreme_channels(m, opts);
            }
            ext = &storage;
        }
        std::vector<Vec> mp_points;
        for (const Channel& e : *ext) {
            const auto& evs = m.state_vertices();
            std::vector<bool> used(evs.size(), false);
            bool rev = true;
            for (const Vec& w : evs) {
                auto idx = m.vertex_index(e.apply(w));
                if (!idx || used[*idx]) {
                    rev = false;
                    break;
                }
                used[*idx] = true;
            }
            if (!rev) mp_points.push_back(e.as_point());
        }
        c.measure_and_prepare = hull_contains(point, mp_points, LpOptions{m.eps(), 1000000});
    }
    return c;
}

MembershipReport in_rare(const Channel& t, const Model& m) {
    std::vector<Vec> pts;
    for (const Channel& r : reversible_channels(m)) pts.push_back(r.as_point());
    HullResult h = hull_member(t.as_point(), pts, LpOptions{m.eps(), 1000000});
    return MembershipReport{h.inside, std::move(h.weights), std::move(h.separation)};
}

MembershipReport in_bisto(const Channel& t, const Model& m, const ChannelEnumOptions& opts) {
    std::vector<Vec> pts;
    for (const Channel& r : bisto_extreme_channels(m, opts)) pts.push_back(r.as_point());
    HullResult h = hull_member(t.as_point(), pts, LpOptions{m.eps(), 1000000});
    return MembershipReport{h.inside, std::move(h.weights), std::move(h.separation)};
}

std::vector<GapEntry> birkhoff_gap(const Model& m, const ChannelEnumOptions& opts) {
    std::vector<GapEntry> out;
    for (const Channel& b : bisto_extreme_channels(m, opts)) {
        MembershipReport r = in_rare(b, m);
        if (!r.member) out.push_back(GapEntry{b, std::move(*r.separation)});
    }
    return out;
}

std::optional<CollisionCertificate> collision_certificate(const Channel& t, const Model& m) {
    if (!is_admissible(t, m)) throw DomainError("collision certificate expects an admissible channel");
    const auto& vs = m.state_vertices();
    std::vector<Vec> images;
    images.reserve(vs.size());
    for (const Vec& w : vs) images.push_back(t.apply(w));
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) {
            if (!eq_within(images[a], images[b], m.eps())) continue;
            auto c = m.vertex_index(images[a]);
            if (!c) continue;
            bool bisto = eq_within(t.apply(m.mixed_state()), m.mixed_state(), m.eps());
            return CollisionCertificate{a + 1, b + 1, *c + 1, t, bisto};
        }
    return std::nullopt;
}

Channel evengon_collapse_map(unsigned k, std::optional<Scalar::Mode> mode) {
    Model m = Model::evengon(k, mode);
    const auto& w = m.state_vertices();
    std::vector<std::pair<Vec, Vec>> pairs{
        {w[0], w[0]},      // w1 -> w1
        {w[1], w[0]},      // w2 -> w1
        {w[k], w[k]},      // w_{k+1} -> w_{k+1}
    };
    Mat T = solve_affine_map(pairs, m.eps());
    Channel c = Channel::from_matrix(std::move(T));
    // The fourth condition w_{k+2} -> w_{k+1} follows by linearity; verify.
    if (!eq_within(c.apply(w[k + 1]), w[k], m.eps()))
        throw AffineMapError("collapse map violates w_{k+2} -> w_{k+1}", 3);
    if (!eq_within(c.apply(m.mixed_state()), m.mixed_state(), m.eps()))
        throw DomainError("collapse map does not fix the mixed state");
    if (!is_admissible(c, m)) throw DomainError("collapse map is not admissible");
    return c;
}

Channel measure_prepare_channel(const Measurement& meas, const std::vector<Vec>& prepared,
                                const Model& m) {
    validate_measurement(meas, m);
    if (prepared.size() != meas.effects.size())
        throw DimensionError("one prepared state per measurement effect required");
    for (const Vec& s : prepared)
        if (!eq_within(s[s.dim() - 1], Scalar::one(m.mode()), m.eps()))
            throw DomainError("prepared states must be normalized");
    Mat acc = Mat::zeros(m.dim(), m.dim(), m.mode());
    for (size_t i = 0; i < prepared.size(); ++i)
        acc = acc + Mat::outer(prepared[i], meas.effects[i].functional);
    Channel c = Channel::from_matrix(std::move(acc));
    if (!is_admissible(c, m))
        throw DomainError("measure-and-prepare assembly produced an inadmissible map");
    return c;
}

FoldResult fold_to_first_quadrant(const TwoCoordState& s) {
    Scalar::Mode mode = s.mode();
    Scalar half = Scalar::one(mode) / 2;
    bool flip_x = s.p < half;
    bool flip_y = s.q < half;
    Channel used = Channel::from_rows(gamma_vec(1, flip_x ? -1 : +1, mode),
                                      gamma_vec(2, flip_y ? -1 : +1, mode));
    TwoCoordState folded(flip_x ? 1 - s.p : s.p, flip_y ? 1 - s.q : s.q);
    return FoldResult{folded, used};
}

}  // namespace gptb

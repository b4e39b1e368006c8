#include "gptb/resource.hpp"

#include <algorithm>
#include <cmath>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

Vec gamma_vec(unsigned axis, int sign, Scalar::Mode mode) {
    Vec v = Vec::unit(3, axis - 1, mode);
    return sign > 0 ? v : -v;
}

}  // namespace

FoldedPair folded_pair(const TwoCoordState& s) {
    TwoCoordState f = fold_to_first_quadrant(s).state;
    return f.p >= f.q ? FoldedPair{f.p, f.q} : FoldedPair{f.q, f.p};
}

ProbVector::ProbVector(std::vector<Scalar> entries, double eps) : e_(std::move(entries)) {
    if (e_.empty()) throw DomainError("probability vector is empty");
    Scalar::Mode m = e_.front().mode();
    Scalar sum = Scalar::zero(m);
    for (const Scalar& x : e_) {
        if (!leq_within(Scalar::zero(m), x, eps)) throw DomainError("negative probability entry");
        sum += x;
    }
    if (!eq_within(sum, Scalar::one(m), eps)) throw DomainError("probabilities do not sum to 1");
}

bool majorizes(const ProbVector& x, const ProbVector& y, double eps) {
    if (x.size() != y.size()) throw DimensionError("majorization needs equal lengths");
    std::vector<Scalar> a = x.entries(), b = y.entries();
    auto desc = [](std::vector<Scalar>& v) {
        std::sort(v.begin(), v.end(), [](const Scalar& s, const Scalar& t) { return t < s; });
    };
    desc(a);
    desc(b);
    Scalar pa = Scalar::zero(a.front().mode()), pb = pa;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (!leq_within(pb, pa, eps)) return false;
    }
    return true;
}

bool convertible_bisto(const TwoCoordState& from, const TwoCoordState& to) {
    return folded_pair(to).eta <= folded_pair(from).eta;
}

bool convertible_rare(const TwoCoordState& from, const TwoCoordState& to) {
    FoldedPair a = folded_pair(from), b = folded_pair(to);
    return b.eta <= a.eta && b.eta + b.delta <= a.eta + a.delta;
}

std::vector<Vec> reachable_vertices(const TwoCoordState& s, ResourceSet set) {
    TwoCoordState f = fold_to_first_quadrant(s).state;
    const Scalar p = f.p, q = f.q;
    std::vector<TwoCoordState> pts;
    if (set == ResourceSet::bisto) {
        Scalar eta = p >= q ? p : q;
        pts = {{eta, eta}, {1 - eta, eta}, {eta, 1 - eta}, {1 - eta, 1 - eta}};
    } else {
        // The dihedral orbit of the folded state.
        pts = {{p, q},         {q, p},         {q, 1 - p},     {p, 1 - q},
               {1 - p, 1 - q}, {1 - q, 1 - p}, {1 - q, p},     {1 - p, q}};
    }
    std::vector<Vec> out;
    for (const TwoCoordState& t : pts) {
        Vec v = t.state_vector();
        bool dup = false;
        for (const Vec& u : out)
            if (eq_within(u, v, 1e-9)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Channel> square_bisto_vertex_channels(Scalar::Mode mode) {
    std::vector<Channel> out;
    for (unsigned i : {1u, 2u})
        for (int si : {+1, -1})
            for (unsigned j : {1u, 2u})
                for (int sj : {+1, -1})
                    out.push_back(Channel::from_rows(gamma_vec(i, si, mode), gamma_vec(j, sj, mode)));
    return out;
}

std::vector<Channel> square_rare_vertex_channels(Scalar::Mode mode) {
    std::vector<Channel> out;
    for (unsigned i : {1u, 2u})
        for (int si : {+1, -1})
            for (unsigned j : {1u, 2u})
                for (int sj : {+1, -1}) {
                    if (i == j) continue;
                    out.push_back(Channel::from_rows(gamma_vec(i, si, mode), gamma_vec(j, sj, mode)));
                }
    return out;
}

bool convertible_oracle(const TwoCoordState& from, const TwoCoordState& to, ResourceSet set) {
    Scalar::Mode m = from.mode();
    std::vector<Channel> verts = set == ResourceSet::bisto ? square_bisto_vertex_channels(m)
                                                           : square_rare_vertex_channels(m);
    Vec source = from.state_vector();
    std::vector<Vec> images;
    images.reserve(verts.size());
    for (const Channel& t : verts) {
        Vec img = t.apply(source);
        bool dup = false;
        for (const Vec& u : images)
            if (u == img) {
                dup = true;
                break;
            }
        if (!dup) images.push_back(std::move(img));
    }
    return hull_contains(to.state_vector(), images);
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("binary entropy argument outside [0,1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double binary_entropy(const Scalar& x) { return binary_entropy(x.to_double()); }

double s_vn(const TwoCoordState& s) { return binary_entropy(folded_pair(s).eta); }

double s_tot(const TwoCoordState& s) { return binary_entropy(s.p) + binary_entropy(s.q); }

ProbVector rare_majorization_vector(const TwoCoordState& s) {
    FoldedPair f = folded_pair(s);
    return ProbVector({f.eta / 2, f.delta / 2, (1 - f.delta) / 2, (1 - f.eta) / 2});
}

bool s_vn_nondecreasing(const TwoCoordState& from, const TwoCoordState& to) {
    return folded_pair(to).eta <= folded_pair(from).eta;
}

bool s_tot_nondecreasing_certified(const TwoCoordState& from, const TwoCoordState& to) {
    return majorizes(rare_majorization_vector(from), rare_majorization_vector(to));
}

}  // namespace gptb

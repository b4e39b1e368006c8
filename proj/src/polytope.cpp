#include "gptb/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "gptb/errors.hpp"
#include "gptb/linsolve.hpp"

namespace gptb {

HalfSpace make_halfspace(Vec normal, Scalar offset) {
    bool all_zero = true;
    for (size_t i = 0; i < normal.dim(); ++i)
        if (!normal[i].is_zero()) {
            all_zero = false;
            break;
        }
    if (all_zero) throw DomainError("halfspace normal is the zero vector");
    return HalfSpace{std::move(normal), std::move(offset)};
}

bool satisfies(const HalfSpace& h, const Vec& point, double eps) {
    return leq_within(dot(h.normal, point), h.offset, eps);
}

bool tight(const HalfSpace& h, const Vec& point, double eps) {
    return eq_within(dot(h.normal, point), h.offset, eps);
}

std::vector<Vec> canonicalize_vertices(std::vector<Vec> points, double eps) {
    std::sort(points.begin(), points.end(), [](const Vec& a, const Vec& b) {
        return lex_less(a, b);
    });
    std::vector<Vec> out;
    for (auto& p : points) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            if (eq_within(*it, p, eps)) {
                dup = true;
                break;
            }
            // Sorted input: once the first coordinate differs by more than
            // eps nothing earlier can match.
            if (!eq_within((*it)[0], p[0], eps)) break;
        }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

Polytope Polytope::from_vertices(std::vector<Vec> vertices, double eps) {
    if (vertices.empty()) throw DomainError("polytope needs at least one vertex");
    Polytope p;
    p.dim_ = vertices.front().dim();
    p.mode_ = vertices.front().mode();
    // Dedup preserving first occurrence; callers rely on their labeling
    // order.
    std::vector<Vec> kept;
    for (auto& v : vertices) {
        if (v.dim() != p.dim_) throw DimensionError("polytope vertex dimension mismatch");
        bool dup = false;
        for (const auto& u : kept)
            if (eq_within(u, v, eps)) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(v));
    }
    p.vertices_ = std::move(kept);
    return p;
}

Polytope Polytope::from_halfspaces(std::vector<HalfSpace> halfspaces, size_t dim) {
    if (halfspaces.empty()) throw DomainError("polytope needs at least one halfspace");
    Polytope p;
    p.dim_ = dim;
    p.mode_ = halfspaces.front().normal.mode();
    for (const auto& h : halfspaces)
        if (h.normal.dim() != dim) throw DimensionError("halfspace dimension mismatch");
    p.halfspaces_ = std::move(halfspaces);
    return p;
}

Polytope Polytope::from_both(std::vector<Vec> vertices, std::vector<HalfSpace> halfspaces,
                             double eps) {
    Polytope p = from_vertices(std::move(vertices), eps);
    Polytope h = from_halfspaces(std::move(halfspaces), p.dim_);
    p.halfspaces_ = h.halfspaces_;
    p.validate(eps);
    return p;
}

const std::vector<Vec>& Polytope::vertices() const {
    if (!vertices_) throw DomainError("polytope has no V-representation");
    return *vertices_;
}

const std::vector<HalfSpace>& Polytope::halfspaces() const {
    if (!halfspaces_) throw DomainError("polytope has no H-representation");
    return *halfspaces_;
}

bool Polytope::contains(const Vec& point, double eps) const {
    if (halfspaces_) {
        for (const auto& h : *halfspaces_)
            if (!satisfies(h, point, eps)) return false;
        return true;
    }
    return hull_contains(point, vertices(), LpOptions{eps, 1000000});
}

void Polytope::validate(double eps) const {
    if (!vertices_ || !halfspaces_) return;
    for (const auto& v : *vertices_)
        for (const auto& h : *halfspaces_)
            if (!satisfies(h, v, eps)) throw DomainError("polytope vertex violates halfspace");

    // Intrinsic dimension = affine rank of the vertex set.
    const auto& vs = *vertices_;
    std::vector<Vec> diffs;
    for (size_t i = 1; i < vs.size(); ++i) diffs.push_back(vs[i] - vs[0]);
    size_t intrinsic = diffs.empty() ? 0 : rank_of(diffs, eps);
    for (const auto& h : *halfspaces_) {
        std::vector<Vec> tight_set;
        for (const auto& v : vs)
            if (tight(h, v, eps)) tight_set.push_back(v);
        if (tight_set.empty()) throw DomainError("halfspace tight at no vertex");
        std::vector<Vec> tdiffs;
        for (size_t i = 1; i < tight_set.size(); ++i)
            tdiffs.push_back(tight_set[i] - tight_set[0]);
        size_t tight_rank = tdiffs.empty() ? 0 : rank_of(tdiffs, eps);
        if (tight_rank + 1 < intrinsic)
            throw DomainError("halfspace tight on too few affinely independent vertices");
    }
}

namespace {

std::vector<LinConstraint> membership_rows(const Vec& point, const std::vector<Vec>& vertices) {
    const size_t d = point.dim();
    const size_t n = vertices.size();
    const Scalar::Mode mode = point.mode();
    std::vector<LinConstraint> rows;
    rows.reserve(d + 1);
    for (size_t c = 0; c < d; ++c) {
        std::vector<Scalar> coeff;
        coeff.reserve(n);
        for (const auto& v : vertices) coeff.push_back(v[c]);
        rows.push_back({Vec(std::move(coeff)), Rel::eq, point[c]});
    }
    rows.push_back({Vec(std::vector<Scalar>(n, Scalar::one(mode))), Rel::eq, Scalar::one(mode)});
    // Identical duplicate rows (the normalization row often repeats a
    // coordinate row on homogeneous data) are dropped.
    std::vector<LinConstraint> dedup;
    for (auto& r : rows) {
        bool dup = false;
        for (const auto& k : dedup)
            if (k.normal == r.normal && k.rhs == r.rhs && k.rel == r.rel) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(std::move(r));
    }
    return dedup;
}

}  // namespace

bool hull_contains(const Vec& point, const std::vector<Vec>& vertices, const LpOptions& opts) {
    if (vertices.empty()) throw DomainError("hull membership against empty vertex list");
    for (const auto& v : vertices)
        if (v.dim() != point.dim()) throw DimensionError("hull membership dimension mismatch");
    auto rows = membership_rows(point, vertices);
    std::vector<bool> nonneg(vertices.size(), true);
    LpResult r = lp_maximize(rows, Vec::zeros(vertices.size(), point.mode()), nonneg, opts);
    return r.status == LpStatus::optimal;
}

HullResult hull_member(const Vec& point, const std::vector<Vec>& vertices, const LpOptions& opts) {
    if (vertices.empty()) throw DomainError("hull membership against empty vertex list");
    for (const auto& v : vertices)
        if (v.dim() != point.dim()) throw DimensionError("hull membership dimension mismatch");
    const size_t d = point.dim();
    const size_t n = vertices.size();
    const Scalar::Mode mode = point.mode();
    const Scalar zero = Scalar::zero(mode);
    const Scalar one = Scalar::one(mode);

    auto rows = membership_rows(point, vertices);
    std::vector<bool> nonneg(n, true);
    LpResult feas = lp_maximize(rows, Vec::zeros(n, mode), nonneg, opts);

    if (feas.status == LpStatus::optimal) {
        // Canonical weights: maximize the smallest one. Variables (λ, t)
        // with λ_i - t >= 0 and the same mixture rows.
        std::vector<LinConstraint> wrows;
        for (auto& r : rows) {
            std::vector<Scalar> coeff = r.normal.coords();
            coeff.push_back(zero);
            wrows.push_back({Vec(std::move(coeff)), r.rel, r.rhs});
        }
        for (size_t i = 0; i < n; ++i) {
            std::vector<Scalar> coeff(n + 1, zero);
            coeff[i] = -one;
            coeff[n] = one;
            wrows.push_back({Vec(std::move(coeff)), Rel::le, zero});
        }
        std::vector<Scalar> obj(n + 1, zero);
        obj[n] = one;
        std::vector<bool> wnn(n + 1, true);
        LpResult wr = lp_maximize(wrows, Vec(std::move(obj)), wnn, opts);
        std::vector<Scalar> weights;
        if (wr.status == LpStatus::optimal) {
            weights.assign(wr.x->coords().begin(), wr.x->coords().begin() + static_cast<std::ptrdiff_t>(n));
        } else {
            weights = feas.x->coords();
        }
        return HullResult{true, std::move(weights), std::nullopt};
    }

    // Max-margin separation: maximize f(point) + t with f(v) + t <= 0 on
    // every vertex and f confined to the unit box.
    std::vector<LinConstraint> srows;
    for (const auto& v : vertices) {
        std::vector<Scalar> coeff = v.coords();
        coeff.push_back(one);
        srows.push_back({Vec(std::move(coeff)), Rel::le, zero});
    }
    for (size_t c = 0; c < d; ++c) {
        std::vector<Scalar> up(d + 1, zero), down(d + 1, zero);
        up[c] = one;
        down[c] = -one;
        srows.push_back({Vec(std::move(up)), Rel::le, one});
        srows.push_back({Vec(std::move(down)), Rel::le, one});
    }
    std::vector<Scalar> obj = point.coords();
    obj.push_back(one);
    LpResult sr = lp_maximize(srows, Vec(std::move(obj)), {}, opts);
    if (sr.status != LpStatus::optimal)
        throw Error("separation LP failed (internal)");
    std::vector<Scalar> f(sr.x->coords().begin(), sr.x->coords().begin() + static_cast<std::ptrdiff_t>(d));
    Vec functional(std::move(f));
    Scalar threshold = dot(functional, vertices.front());
    for (const auto& v : vertices) {
        Scalar s = dot(functional, v);
        if (s > threshold) threshold = s;
    }
    Scalar gap = dot(functional, point) - threshold;
    if (gap.sign() <= 0) throw Error("separation produced a non-positive gap (internal)");
    return HullResult{false, std::nullopt, HullSeparation{std::move(functional), std::move(threshold), std::move(gap)}};
}

namespace {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Combination of given lexicographic rank (combinatorial number system).
std::vector<size_t> unrank_combination(uint64_t rank, size_t m, size_t d) {
    std::vector<size_t> comb(d);
    size_t x = 0;
    for (size_t i = 0; i < d; ++i) {
        while (true) {
            uint64_t block = binomial(static_cast<uint64_t>(m - x - 1), static_cast<uint64_t>(d - i - 1));
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        comb[i] = x++;
    }
    return comb;
}

bool next_combination(std::vector<size_t>& comb, size_t m) {
    size_t d = comb.size();
    for (size_t i = d; i-- > 0;) {
        if (comb[i] < m - d + i) {
            ++comb[i];
            for (size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Vec> enumerate_vertices(const std::vector<HalfSpace>& halfspaces, size_t dim,
                                    const EnumerateOptions& opts) {
    if (dim < 1) throw DimensionError("enumerate_vertices: dim must be >= 1");
    if (halfspaces.size() < dim) throw DimensionError("enumerate_vertices: fewer halfspaces than dim");
    const Scalar::Mode mode = halfspaces.front().normal.mode();
    for (const auto& h : halfspaces)
        if (h.normal.dim() != dim) throw DimensionError("enumerate_vertices: malformed halfspace dimensions");

    // Reject unbounded H-reps up front: an LP in each coordinate direction.
    LpOptions lopts{opts.eps, 1000000};
    std::vector<LinConstraint> rows;
    rows.reserve(halfspaces.size());
    for (const auto& h : halfspaces) rows.push_back({h.normal, Rel::le, h.offset});
    for (size_t c = 0; c < dim; ++c) {
        for (int dir : {+1, -1}) {
            Vec obj = dir > 0 ? Vec::unit(dim, c, mode) : -Vec::unit(dim, c, mode);
            LpResult r = lp_maximize(rows, obj, {}, lopts);
            if (r.status == LpStatus::unbounded)
                throw UnboundedError("H-representation describes an unbounded set");
            if (r.status == LpStatus::infeasible) return {};
        }
    }

    const size_t m = halfspaces.size();
    const uint64_t total = binomial(m, dim);
    unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<uint64_t>(nthreads) > total) nthreads = static_cast<unsigned>(std::max<uint64_t>(1, total));

    auto scan_range = [&](uint64_t begin, uint64_t end, std::vector<Vec>& found) {
        if (begin >= end) return;
        std::vector<size_t> comb = unrank_combination(begin, m, dim);
        for (uint64_t r = begin; r < end; ++r) {
            std::vector<Scalar> a;
            a.reserve(dim * dim);
            std::vector<Scalar> b;
            b.reserve(dim);
            for (size_t idx : comb) {
                for (size_t j = 0; j < dim; ++j) a.push_back(halfspaces[idx].normal[j]);
                b.push_back(halfspaces[idx].offset);
            }
            auto x = solve_unique(Mat(dim, dim, std::move(a)), Vec(std::move(b)), opts.eps);
            if (x) {
                bool ok = true;
                for (const auto& h : halfspaces)
                    if (!satisfies(h, *x, opts.eps)) {
                        ok = false;
                        break;
                    }
                if (ok) found.push_back(std::move(*x));
            }
            if (r + 1 < end) next_combination(comb, m);
        }
    };

    std::vector<Vec> all;
    if (nthreads <= 1) {
        scan_range(0, total, all);
    } else {
        std::vector<std::vector<Vec>> parts(nthreads);
        std::vector<std::thread> pool;
        uint64_t chunk = (total + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            uint64_t lo = chunk * t;
            uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { scan_range(lo, hi, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& v : part) all.push_back(std::move(v));
    }
    return canonicalize_vertices(std::move(all), opts.eps);
}

std::vector<Vec> enumerate_vertices(const Polytope& hrep, const EnumerateOptions& opts) {
    return enumerate_vertices(hrep.halfspaces(), hrep.dim(), opts);
}

}  // namespace gptb

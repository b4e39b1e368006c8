#include "gptb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

struct Tableau {
    // rows[i] has ncols structural entries followed by the rhs.
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> cost;  // reduced costs, then -objective value
    std::vector<size_t> basis;
    size_t ncols = 0;
    Scalar::Mode mode = Scalar::Mode::exact;
    double eps = 1e-9;

    bool exact() const { return mode == Scalar::Mode::exact; }

    bool pos(const Scalar& s) const { return exact() ? s.sign() > 0 : s.dbl() > eps; }
    bool neg(const Scalar& s) const { return exact() ? s.sign() < 0 : s.dbl() < -eps; }
    bool nonzero(const Scalar& s) const { return exact() ? !s.is_zero() : std::fabs(s.dbl()) > eps; }

    void pivot(size_t prow, size_t pcol) {
        auto& pr = rows[prow];
        const Scalar inv_head = pr[pcol];
        for (auto& v : pr) v /= inv_head;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == prow) continue;
            eliminate_row(rows[i], pr, pcol);
        }
        eliminate_row(cost, pr, pcol);
        basis[prow] = pcol;
    }

    static void eliminate_row(std::vector<Scalar>& row, const std::vector<Scalar>& pr, size_t pcol) {
        const Scalar f = row[pcol];
        if (f.is_zero()) return;
        for (size_t j = 0; j < row.size(); ++j) row[j] -= f * pr[j];
    }

    // Entering column for the minimization step, or npos when optimal.
    // `blocked` columns (phase-1 artificials in phase 2) never enter.
    size_t entering(bool bland, const std::vector<bool>& blocked) const {
        size_t best = npos;
        for (size_t j = 0; j < ncols; ++j) {
            if (!blocked.empty() && blocked[j]) continue;
            if (!neg(cost[j])) continue;
            if (bland) return j;
            if (best == npos || cost[j] < cost[best]) best = j;
        }
        return best;
    }

    // Min-ratio leaving row; ties break toward the smallest basis index so
    // that Bland's rule applies in exact mode. npos when unbounded.
    size_t leaving(size_t pcol) const {
        size_t best = npos;
        Scalar best_ratio = Scalar::zero(mode);
        for (size_t i = 0; i < rows.size(); ++i) {
            const Scalar& a = rows[i][pcol];
            if (!pos(a)) continue;
            Scalar rhs = rows[i].back();
            if (!exact() && rhs.dbl() < 0.0) rhs = Scalar::real(0.0);
            Scalar ratio = rhs / a;
            if (best == npos || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    static constexpr size_t npos = static_cast<size_t>(-1);
};

// Runs minimization pivots until optimal/unbounded. Returns false when the
// entering column is unbounded below.
bool run_simplex(Tableau& t, const std::vector<bool>& blocked, const LpOptions& opts) {
    long iters = 0;
    const long bland_after = t.exact() ? 0 : opts.max_iters / 2;
    while (true) {
        if (++iters > opts.max_iters) throw Error("simplex iteration limit exceeded");
        const bool bland = t.exact() || iters > bland_after;
        size_t pcol = t.entering(bland, blocked);
        if (pcol == Tableau::npos) return true;
        size_t prow = t.leaving(pcol);
        if (prow == Tableau::npos) return false;
        t.pivot(prow, pcol);
    }
}

struct ColumnMap {
    // Column of +x_j; column of -x_j or npos when x_j is nonnegative.
    std::vector<size_t> plus, minus;
    size_t nstruct = 0;  // structural columns (variable splits + slacks)
};

}  // namespace

LpResult lp_maximize(const std::vector<LinConstraint>& constraints, const Vec& objective,
                     const std::vector<bool>& nonneg, const LpOptions& opts) {
    const size_t dim = objective.dim();
    const Scalar::Mode mode = objective.mode();
    if (!nonneg.empty() && nonneg.size() != dim)
        throw DimensionError("lp_maximize: nonneg flag count mismatch");
    for (const auto& c : constraints) {
        if (c.normal.dim() != dim) throw DimensionError("lp_maximize: malformed constraint dimensions");
        if (c.normal.mode() != mode || c.rhs.mode() != mode)
            throw ScalarModeError("lp_maximize: mixed scalar modes");
    }

    const Scalar zero = Scalar::zero(mode);
    const Scalar one = Scalar::one(mode);

    ColumnMap cm;
    cm.plus.resize(dim);
    cm.minus.assign(dim, Tableau::npos);
    size_t col = 0;
    for (size_t j = 0; j < dim; ++j) {
        cm.plus[j] = col++;
        if (nonneg.empty() || !nonneg[j]) cm.minus[j] = col++;
    }
    const size_t nslack = static_cast<size_t>(
        std::count_if(constraints.begin(), constraints.end(),
                      [](const LinConstraint& c) { return c.rel == Rel::le; }));
    cm.nstruct = col + nslack;

    const size_t m = constraints.size();
    Tableau t;
    t.mode = mode;
    t.eps = opts.eps;
    t.rows.assign(m, std::vector<Scalar>(cm.nstruct + 1, zero));
    t.basis.assign(m, Tableau::npos);

    size_t slack_col = col;
    std::vector<bool> row_flipped(m, false);
    for (size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        bool flip = c.rhs.sign() < 0;
        row_flipped[i] = flip;
        for (size_t j = 0; j < dim; ++j) {
            Scalar a = flip ? -c.normal[j] : c.normal[j];
            t.rows[i][cm.plus[j]] = a;
            if (cm.minus[j] != Tableau::npos) t.rows[i][cm.minus[j]] = -a;
        }
        t.rows[i].back() = flip ? -c.rhs : c.rhs;
        if (c.rel == Rel::le) {
            t.rows[i][slack_col] = flip ? -one : one;
            if (!flip) t.basis[i] = slack_col;
            ++slack_col;
        }
    }

    // Artificial columns for rows without a ready identity column.
    std::vector<size_t> art_cols;
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] != Tableau::npos) continue;
        for (auto& row : t.rows) row.insert(row.end() - 1, zero);
        size_t ac = t.rows[i].size() - 2;
        t.rows[i][ac] = one;
        t.basis[i] = ac;
        art_cols.push_back(ac);
    }
    t.ncols = t.rows.empty() ? cm.nstruct : t.rows.front().size() - 1;

    // Phase 1: minimize the artificial sum. Reduced costs of the unit-cost
    // artificial basis are the negated column sums over artificial rows.
    t.cost.assign(t.ncols + 1, zero);
    for (size_t ac : art_cols) t.cost[ac] = one;
    for (size_t i = 0; i < m; ++i) {
        if (std::find(art_cols.begin(), art_cols.end(), t.basis[i]) == art_cols.end()) continue;
        for (size_t j = 0; j <= t.ncols; ++j) t.cost[j] -= t.rows[i][j];
    }
    if (!run_simplex(t, {}, opts)) throw Error("phase-1 objective unbounded (internal)");
    {
        Scalar infeas = -t.cost.back();
        bool feasible = t.exact() ? infeas.is_zero() : std::fabs(infeas.dbl()) <= opts.eps;
        if (!feasible) return LpResult{LpStatus::infeasible, std::nullopt, std::nullopt, std::nullopt};
    }

    // Drive basic artificials out; rows that cannot pivot are redundant.
    std::vector<bool> is_art(t.ncols, false);
    for (size_t ac : art_cols) is_art[ac] = true;
    for (size_t i = t.rows.size(); i-- > 0;) {
        if (!is_art[t.basis[i]]) continue;
        size_t pcol = Tableau::npos;
        for (size_t j = 0; j < t.ncols; ++j)
            if (!is_art[j] && t.nonzero(t.rows[i][j])) {
                pcol = j;
                break;
            }
        if (pcol != Tableau::npos) {
            t.pivot(i, pcol);
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2: minimize -objective with reduced costs rebuilt for the
    // current basis.
    t.cost.assign(t.ncols + 1, zero);
    auto struct_cost = [&](size_t col_index) -> Scalar {
        for (size_t j = 0; j < dim; ++j) {
            if (cm.plus[j] == col_index) return -objective[j];
            if (cm.minus[j] == col_index) return objective[j];
        }
        return Scalar::zero(mode);
    };
    for (size_t j = 0; j < t.ncols; ++j) t.cost[j] = struct_cost(j);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        Scalar cb = struct_cost(t.basis[i]);
        if (cb.is_zero()) continue;
        for (size_t j = 0; j <= t.ncols; ++j) t.cost[j] -= cb * t.rows[i][j];
    }
    if (!run_simplex(t, is_art, opts))
        return LpResult{LpStatus::unbounded, std::nullopt, std::nullopt, std::nullopt};

    std::vector<Scalar> x(dim, zero);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (size_t j = 0; j < dim; ++j) {
            if (t.basis[i] == cm.plus[j]) x[j] += t.rows[i].back();
            if (t.basis[i] == cm.minus[j]) x[j] -= t.rows[i].back();
        }
    }
    Vec xv(std::move(x));
    Scalar value = dot(objective, xv);
    return LpResult{LpStatus::optimal, std::move(xv), std::move(value), std::nullopt};
}

bool verify_farkas(const std::vector<LinConstraint>& constraints,
                   const std::vector<Scalar>& multipliers, double eps) {
    if (constraints.empty() || multipliers.size() != constraints.size()) return false;
    const size_t dim = constraints.front().normal.dim();
    const Scalar::Mode mode = constraints.front().normal.mode();
    Vec combo = Vec::zeros(dim, mode);
    Scalar rhs = Scalar::zero(mode);
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].rel == Rel::le && multipliers[i].sign() < 0 &&
            !(mode == Scalar::Mode::real && multipliers[i].dbl() >= -eps))
            return false;
        combo = combo + multipliers[i] * constraints[i].normal;
        rhs += multipliers[i] * constraints[i].rhs;
    }
    if (!eq_within(combo, Vec::zeros(dim, mode), eps)) return false;
    return mode == Scalar::Mode::exact ? rhs.sign() < 0 : rhs.dbl() < -eps;
}

LpResult lp_feasible(const std::vector<LinConstraint>& constraints, size_t dim,
                     Scalar::Mode mode, const LpOptions& opts, bool want_certificate) {
    if (dim < 1) throw DimensionError("lp_feasible: dim must be >= 1");
    LpResult r = lp_maximize(constraints, Vec::zeros(dim, mode), {}, opts);
    if (r.status != LpStatus::infeasible || !want_certificate) return r;

    // Alternative system: multipliers y with Σ y_i a_i = 0 and Σ y_i b_i =
    // -1, y >= 0 on inequality rows. Feasible exactly when the input is not.
    const size_t m = constraints.size();
    std::vector<LinConstraint> alt;
    std::vector<bool> nonneg(m, false);
    for (size_t c = 0; c < dim; ++c) {
        std::vector<Scalar> row(m, Scalar::zero(mode));
        for (size_t i = 0; i < m; ++i) row[i] = constraints[i].normal[c];
        alt.push_back({Vec(std::move(row)), Rel::eq, Scalar::zero(mode)});
    }
    {
        std::vector<Scalar> row(m, Scalar::zero(mode));
        for (size_t i = 0; i < m; ++i) row[i] = constraints[i].rhs;
        alt.push_back({Vec(std::move(row)), Rel::eq, -Scalar::one(mode)});
    }
    for (size_t i = 0; i < m; ++i) nonneg[i] = constraints[i].rel == Rel::le;
    LpResult alt_r = lp_maximize(alt, Vec::zeros(m, mode), nonneg, opts);
    if (alt_r.status == LpStatus::optimal) {
        std::vector<Scalar> y = alt_r.x->coords();
        if (verify_farkas(constraints, y, opts.eps)) r.farkas = std::move(y);
    }
    return r;
}

}  // namespace gptb

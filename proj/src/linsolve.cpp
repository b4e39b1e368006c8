#include "gptb/linsolve.hpp"

#include <algorithm>
#include <cmath>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

// Row-echelon elimination shared by the rank and solve entry points.
// Operates on an augmented row-major table with `cols` structural columns
// plus `extra` right-hand-side columns. Returns the pivot column list.
struct Echelon {
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> pivot_cols;
};

bool is_nonzero(const Scalar& s, double eps) {
    if (s.is_exact()) return !s.is_zero();
    return std::fabs(s.dbl()) > eps;
}

Echelon eliminate(std::vector<std::vector<Scalar>> rows, size_t cols, double eps) {
    Echelon e;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Exact mode takes the first usable pivot; real mode the largest.
        size_t best = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (!is_nonzero(rows[i][c], eps)) continue;
            if (best == rows.size()) {
                best = i;
                if (rows[i][c].is_exact()) break;
            } else if (std::fabs(rows[i][c].dbl()) > std::fabs(rows[best][c].dbl())) {
                best = i;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        const Scalar pivot = rows[r][c];
        for (size_t j = c; j < rows[r].size(); ++j) rows[r][j] /= pivot;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Scalar factor = rows[i][c];
            if (!is_nonzero(factor, 0.0)) continue;
            for (size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

std::optional<Vec> solve_unique(const Mat& A, const Vec& b, double eps) {
    if (A.rows() != b.dim()) throw DimensionError("solve_unique: rhs dimension mismatch");
    size_t n = A.cols();
    std::vector<std::vector<Scalar>> rows(A.rows());
    for (size_t i = 0; i < A.rows(); ++i) {
        rows[i].reserve(n + 1);
        for (size_t j = 0; j < n; ++j) rows[i].push_back(A.at(i, j));
        rows[i].push_back(b[i]);
    }
    Echelon e = eliminate(std::move(rows), n, eps);
    if (e.pivot_cols.size() < n) return std::nullopt;
    // Unique solution requires consistency of any surplus rows.
    for (size_t i = n; i < e.rows.size(); ++i)
        if (is_nonzero(e.rows[i][n], eps)) return std::nullopt;
    std::vector<Scalar> x(n, Scalar::zero(A.mode()));
    for (size_t k = 0; k < n; ++k) x[e.pivot_cols[k]] = e.rows[k][n];
    return Vec(std::move(x));
}

size_t matrix_rank(const Mat& A, double eps) {
    std::vector<std::vector<Scalar>> rows(A.rows());
    for (size_t i = 0; i < A.rows(); ++i) {
        rows[i].reserve(A.cols());
        for (size_t j = 0; j < A.cols(); ++j) rows[i].push_back(A.at(i, j));
    }
    return eliminate(std::move(rows), A.cols(), eps).pivot_cols.size();
}

size_t rank_of(const std::vector<Vec>& rows, double eps) {
    if (rows.empty()) return 0;
    return matrix_rank(Mat::from_rows(rows), eps);
}

Mat solve_affine_map(const std::vector<std::pair<Vec, Vec>>& pairs, double eps) {
    if (pairs.empty()) throw AffineMapError("no source/image pairs");
    const size_t d = pairs.front().first.dim();
    const Scalar::Mode mode = pairs.front().first.mode();
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [src, img] = pairs[i];
        if (src.dim() != d || img.dim() != d)
            throw AffineMapError("pair dimension mismatch", static_cast<std::ptrdiff_t>(i));
        if (!eq_within(src[d - 1], Scalar::one(mode), eps) ||
            !eq_within(img[d - 1], Scalar::one(mode), eps))
            throw AffineMapError("pair is not on the normalization slice",
                                 static_cast<std::ptrdiff_t>(i));
    }

    // Rows of T decouple: row j solves S t_j = y_j with the shared source
    // matrix S. One elimination over S augmented with all image columns.
    std::vector<std::vector<Scalar>> rows(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        rows[i].reserve(d + (d - 1));
        for (size_t j = 0; j < d; ++j) rows[i].push_back(pairs[i].first[j]);
        for (size_t j = 0; j + 1 < d; ++j) rows[i].push_back(pairs[i].second[j]);
    }
    Echelon e = eliminate(std::move(rows), d, eps);
    if (e.pivot_cols.size() < d)
        throw AffineMapError("sources are affinely dependent (under-determined map)");

    std::vector<Scalar> entries(d * d, Scalar::zero(mode));
    for (size_t out = 0; out + 1 < d; ++out)
        for (size_t k = 0; k < d; ++k) entries[out * d + e.pivot_cols[k]] = e.rows[k][d + out];
    entries[d * d - 1] = Scalar::one(mode);
    Mat T(d, d, std::move(entries));

    // Over-determining pairs must be consistent with the reconstructed map.
    for (size_t i = 0; i < pairs.size(); ++i)
        if (!eq_within(T.apply(pairs[i].first), pairs[i].second, eps))
            throw AffineMapError("inconsistent over-determined pair",
                                 static_cast<std::ptrdiff_t>(i));
    return T;
}

}  // namespace gptb

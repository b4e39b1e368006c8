#pragma once

#include <optional>
#include <vector>

#include "gptb/lp.hpp"
#include "gptb/vec.hpp"

namespace gptb {

/// Closed halfspace normal · x <= offset. The normal is never zero.
struct HalfSpace {
    Vec normal;
    Scalar offset;
};

HalfSpace make_halfspace(Vec normal, Scalar offset);
bool satisfies(const HalfSpace& h, const Vec& point, double eps);
bool tight(const HalfSpace& h, const Vec& point, double eps);

/* Convex polytope carrying a V-representation, an H-representation, or
 * both. Vertex lists are deduplicated at construction (exactly, or within
 * eps for real scalars). When both representations are present validate()
 * cross-checks them. */
class Polytope {
public:
    static Polytope from_vertices(std::vector<Vec> vertices, double eps = 1e-9);
    static Polytope from_halfspaces(std::vector<HalfSpace> halfspaces, size_t dim);
    static Polytope from_both(std::vector<Vec> vertices, std::vector<HalfSpace> halfspaces,
                              double eps = 1e-9);

    bool has_vertices() const { return vertices_.has_value(); }
    bool has_halfspaces() const { return halfspaces_.has_value(); }
    const std::vector<Vec>& vertices() const;
    const std::vector<HalfSpace>& halfspaces() const;

    size_t dim() const { return dim_; }
    Scalar::Mode mode() const { return mode_; }

    /// Membership through the H-rep when present, else through an LP over
    /// the vertices.
    bool contains(const Vec& point, double eps) const;

    /// Both-representation consistency: every vertex satisfies every
    /// halfspace, and every halfspace is tight on at least dim affinely
    /// independent vertices (dim meaning the intrinsic dimension).
    void validate(double eps) const;

private:
    Polytope() = default;
    std::optional<std::vector<Vec>> vertices_;
    std::optional<std::vector<HalfSpace>> halfspaces_;
    size_t dim_ = 0;
    Scalar::Mode mode_ = Scalar::Mode::exact;
};

struct HullSeparation {
    Vec functional;    // f with f(point) > threshold >= f(v) for all v
    Scalar threshold;  // max of f over the vertices
    Scalar gap;        // f(point) - threshold, strictly positive
};

struct HullResult {
    bool inside;
    std::optional<std::vector<Scalar>> weights;  // convex weights when inside
    std::optional<HullSeparation> separation;    // certificate when outside
};

/* Convex-hull membership. Inside points come back with convex weights
 * canonicalized by maximizing the smallest weight (so symmetric queries get
 * the symmetric decomposition); outside points come back with a max-margin
 * separating functional normalized to the unit box. */
HullResult hull_member(const Vec& point, const std::vector<Vec>& vertices,
                       const LpOptions& opts = {});

/// Feasibility-only membership (no weights, no certificate).
bool hull_contains(const Vec& point, const std::vector<Vec>& vertices,
                   const LpOptions& opts = {});

struct EnumerateOptions {
    double eps = 1e-9;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/* All extreme points of an H-rep, found combinatorially: every dim-subset
 * of tight facet equations with a unique solution contributes its solution
 * when that point satisfies the remaining inequalities. Output is
 * deduplicated and sorted lexicographically, so it does not depend on the
 * halfspace order or the thread count. Throws UnboundedError when some
 * coordinate direction is unbounded. */
std::vector<Vec> enumerate_vertices(const std::vector<HalfSpace>& halfspaces, size_t dim,
                                    const EnumerateOptions& opts = {});
std::vector<Vec> enumerate_vertices(const Polytope& hrep, const EnumerateOptions& opts = {});

/// Lexicographic sort + dedup used everywhere canonical vertex lists are
/// produced.
std::vector<Vec> canonicalize_vertices(std::vector<Vec> points, double eps);

}  // namespace gptb

#pragma once

#include <vector>

#include "gptb/channel.hpp"

namespace gptb {

/// Folded coordinates eta = max{p,q}, delta = min{p,q}, both in [1/2, 1].
struct FoldedPair {
    Scalar eta, delta;
};

FoldedPair folded_pair(const TwoCoordState& s);

/// Nonnegative entries summing to one.
class ProbVector {
public:
    explicit ProbVector(std::vector<Scalar> entries, double eps = 1e-9);
    const std::vector<Scalar>& entries() const { return e_; }
    size_t size() const { return e_.size(); }

private:
    std::vector<Scalar> e_;
};

/// Descending prefix sums of x dominate those of y (totals equal).
bool majorizes(const ProbVector& x, const ProbVector& y, double eps = 1e-9);

enum class ResourceSet { bisto, rare };

/// eta >= eta' after folding both states.
bool convertible_bisto(const TwoCoordState& from, const TwoCoordState& to);

/// eta >= eta' and eta + delta >= eta' + delta'.
bool convertible_rare(const TwoCoordState& from, const TwoCoordState& to);

/* Extreme points of the reachable set: the 4 corners (±(2η-1), ±(2η-1))
 * under the bistochastic channels, the 8-point dihedral orbit of the state
 * under the reversibles. Degenerate inputs collapse duplicates. */
std::vector<Vec> reachable_vertices(const TwoCoordState& s, ResourceSet set);

/* Brute-force convertibility: LP feasibility of to ∈ conv{T_i(from)} over
 * the set's extreme channels. Exact in rational mode; the independent check
 * the closed-form criteria are measured against. */
bool convertible_oracle(const TwoCoordState& from, const TwoCoordState& to, ResourceSet set);

/// The 16 bistochastic extreme channels of the square, built directly from
/// the γ pairs (i, j in {1,2}).
std::vector<Channel> square_bisto_vertex_channels(Scalar::Mode mode);
/// The 8 reversibles of the square.
std::vector<Channel> square_rare_vertex_channels(Scalar::Mode mode);

/// H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0. Bits.
double binary_entropy(double x);
double binary_entropy(const Scalar& x);

/// H(max{p,q}) after folding: the monotone shared by both channel classes.
double s_vn(const TwoCoordState& s);
/// H(p) + H(q); monotone under the reversible mixtures.
double s_tot(const TwoCoordState& s);

/// (η, δ, 1-δ, 1-η)/2 — majorization witness for reversible-mixture
/// convertibility.
ProbVector rare_majorization_vector(const TwoCoordState& s);

/* Exact monotonicity surrogates: H is strictly decreasing on [1/2, 1], so
 * s_vn(from) <= s_vn(to) iff eta(to) <= eta(from); the s_tot comparison is
 * certified by the 4-entry majorization. Both avoid floating-point entropy
 * values entirely. */
bool s_vn_nondecreasing(const TwoCoordState& from, const TwoCoordState& to);
bool s_tot_nondecreasing_certified(const TwoCoordState& from, const TwoCoordState& to);

}  // namespace gptb

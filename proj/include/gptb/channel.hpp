#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gptb/model.hpp"
#include "gptb/polytope.hpp"

namespace gptb {

/* Normalization-preserving linear map: a dim x dim matrix whose last row is
 * (0, ..., 0, 1). Single-system channels are the pair [r, s] of their first
 * two rows; composite channels are Kronecker products. */
class Channel {
public:
    static Channel from_rows(Vec r, Vec s);
    static Channel from_matrix(Mat m);
    static Channel identity(size_t dim, Scalar::Mode mode);
    /// From the R^6 point (r1, r2, r3, s1, s2, s3).
    static Channel from_point(const Vec& point);

    const Mat& matrix() const { return m_; }
    size_t dim() const { return m_.rows(); }
    Scalar::Mode mode() const { return m_.mode(); }

    Vec r() const;
    Vec s() const;
    /// (r1, r2, r3, s1, s2, s3); single-system channels only.
    Vec as_point() const;

    Vec apply(const Vec& state) const;
    /// Composition: (a * b)(x) = a(b(x)).
    friend Channel operator*(const Channel& a, const Channel& b);

    bool operator==(const Channel& o) const { return m_ == o.m_; }

private:
    explicit Channel(Mat m) : m_(std::move(m)) {}
    Mat m_;
};

Channel tensor_channel(const std::vector<Channel>& parts);
bool eq_within(const Channel& a, const Channel& b, double eps);

/// "[g1+,g2-]" (γ-pair grammar; 'g' or 'γ', index 1..3, sign + or -), or
/// "id" for the identity.
Channel parse_channel_name(const std::string& name, Scalar::Mode mode);
/// The symbolic name when the channel is a γ-pair, nullopt otherwise.
std::optional<std::string> channel_name(const Channel& c, double eps);

struct ChannelClass {
    bool admissible = false;
    bool reversible = false;
    bool bistochastic = false;
    bool extreme = false;
    bool measure_and_prepare = false;
};

struct ChannelEnumOptions {
    /// Full channel-vertex enumeration walks C(4k^2, 6) facet subsets;
    /// beyond k = 4 that needs an explicit opt-in.
    bool allow_large = false;
    unsigned threads = 0;
    /// Precomputed extreme-channel list; classify() uses it instead of
    /// re-enumerating (callers looping over many channels want this).
    const std::vector<Channel>* extreme_hint = nullptr;
};

/// Image of every state vertex satisfies the model's H-representation.
bool is_admissible(const Channel& t, const Model& m);

/// H-rep of the admissible-channel polytope in R^6: one inequality per
/// (state facet, state vertex) pair, 4k^2 in total.
std::vector<HalfSpace> channel_hrep(const Model& m);

/// All extreme channels, via vertex enumeration of channel_hrep.
std::vector<Channel> enumerate_extreme_channels(const Model& m, const ChannelEnumOptions& = {});

/// The 4k reversible channels: 2k rotations by pi·i/k and 2k reflections.
std::vector<Channel> reversible_channels(const Model& m);

/// Extreme points of the bistochastic sub-polytope (r3 = s3 = 0 slice).
std::vector<Channel> bisto_extreme_channels(const Model& m, const ChannelEnumOptions& = {});

ChannelClass classify(const Channel& t, const Model& m, const ChannelEnumOptions& = {});

struct MembershipReport {
    bool member = false;
    std::optional<std::vector<Scalar>> weights;  // over the tested vertex set
    std::optional<HullSeparation> separation;
};

MembershipReport in_rare(const Channel& t, const Model& m);
MembershipReport in_bisto(const Channel& t, const Model& m, const ChannelEnumOptions& = {});

struct GapEntry {
    Channel channel;
    HullSeparation separation;
};

/// Every extreme bistochastic channel outside the random-reversible
/// polytope, with its separation certificate.
std::vector<GapEntry> birkhoff_gap(const Model& m, const ChannelEnumOptions& = {});

/* Two distinct extreme states that the channel sends to one extreme state.
 * For a bistochastic channel this certifies that no tensor power of it is a
 * mixture of reversibles, whatever composite state space (between the
 * minimal and maximal tensor product) carries the power. */
struct CollisionCertificate {
    size_t a, b;  // colliding vertex labels (1-based)
    size_t c;     // common image label (1-based)
    Channel channel;
    bool bistochastic;
};

std::optional<CollisionCertificate> collision_certificate(const Channel& t, const Model& m);

/// The bistochastic collapse w1,w2 -> w1, w_{k+1},w_{k+2} -> w_{k+1},
/// reconstructed from three of its vertex conditions with the fourth
/// verified.
Channel evengon_collapse_map(unsigned k, std::optional<Scalar::Mode> mode = std::nullopt);

/// T(x) = Σ_i e_i(x) · prepared_i, assembled as Σ prepared_i e_i^T.
Channel measure_prepare_channel(const Measurement& meas, const std::vector<Vec>& prepared,
                                const Model& m);

struct FoldResult {
    TwoCoordState state;  // p, q in [1/2, 1]
    Channel used;         // the reversible that folds the input
};

/// Reflects a state into the first quadrant (p, q >= 1/2); identity when
/// already there.
FoldResult fold_to_first_quadrant(const TwoCoordState& s);

}  // namespace gptb

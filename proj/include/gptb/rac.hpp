#pragma once

#include <vector>

#include "gptb/channel.hpp"

namespace gptb {

enum class ChannelSet { rare, bisto, full, explicit_list };

/* One round of the 2->1 random access code with a referee-supplied state:
 * the sender may only encode by applying channels from a restricted set to
 * the given state. Decoding defaults to the fiducial pair, {e1,e3} for the
 * first question and {e2,e4} for the second. */
struct RacInstance {
    TwoCoordState initial;
    ChannelSet set = ChannelSet::rare;
    std::vector<Channel> explicit_vertices;  // used when set == explicit_list
    Measurement decode0, decode1;

    static RacInstance standard(TwoCoordState state, ChannelSet set);
    static RacInstance with_vertices(TwoCoordState state, std::vector<Channel> vertices);
};

/* Worst-case payoff of a strategy. The bias is the minimum over the eight
 * (message, question) pairs of the recentred score 2 e(T(w)) - 1; the
 * success probability is (1 + bias)/2. Scores are ordered message-major:
 * (msg 00, y 0), (msg 00, y 1), (msg 01, y 0), ... */
struct RacOutcome {
    Scalar bias;
    Scalar probability;
    std::vector<Channel> encodings;    // four, indexed by message x0 x1
    std::vector<Vec> encoded_states;   // images of the initial state
    std::vector<Scalar> scores;        // eight recentred scores
};

/// Extreme channels of a named set (8 reversibles, 16 bistochastic, 36
/// full) over the square; explicit lists pass through.
std::vector<Channel> channel_set_vertices(const RacInstance& inst);

/// Payoff of four given encodings; each must lie in the instance's channel
/// set (checked by an LP over the set's vertices).
RacOutcome evaluate_strategy(const RacInstance& inst, const std::vector<Channel>& encodings);

/* The half-half reversible mixtures that send the folded state to
 * (±a, ±a, 1) with a = (|2p-1| + |2q-1|)/2. */
std::vector<Channel> canonical_rare_encodings(const TwoCoordState& state);

/* Collapse to the larger coordinate followed by the four rotations; the
 * encoded states are (±b, ±b, 1) with b = max(|2p-1|, |2q-1|). */
std::vector<Channel> canonical_bisto_encodings(const TwoCoordState& state);

/* LP-optimal worst-case payoff: per message, maximize the minimum of the
 * two relevant scores over the convex hull of the set's vertices; the
 * overall bias is the worst message's optimum. */
RacOutcome optimal_bias(const RacInstance& inst);

/// Closed-form biases the optimizer is measured against.
Scalar rare_bias_formula(const TwoCoordState& state);
Scalar bisto_bias_formula(const TwoCoordState& state);

/// One classical bit: worst-case probability 1/2, bias 0.
inline constexpr double kClassicalBias = 0.0;
inline constexpr double kClassicalProbability = 0.5;
/// Reference value for the optimal qubit strategy (not implemented here).
double qubit_reference_probability();

}  // namespace gptb

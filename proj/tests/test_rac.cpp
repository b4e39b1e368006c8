#include <doctest.h>

#include <random>

#include "gptb/rac.hpp"

using namespace gptb;

namespace {

Scalar E(long long n, long long d = 1) { return Scalar::exact(n, d); }

TwoCoordState st(long long pn, long long pd, long long qn, long long qd) {
    return TwoCoordState(E(pn, pd), E(qn, qd));
}

}  // namespace

TEST_CASE("a corner state yields a perfect reversible strategy") {
    TwoCoordState corner = st(1, 1, 1, 1);
    RacInstance inst = RacInstance::standard(corner, ChannelSet::rare);
    RacOutcome out = evaluate_strategy(inst, canonical_rare_encodings(corner));
    CHECK(out.bias == E(1));
    CHECK(out.probability == E(1));
    // Encoded states are the four corners.
    Model sq = Model::evengon(2);
    CHECK(out.encoded_states[0] == sq.state_vertices()[0]);
    CHECK(out.encoded_states[1] == sq.state_vertices()[3]);
    CHECK(out.encoded_states[2] == sq.state_vertices()[1]);
    CHECK(out.encoded_states[3] == sq.state_vertices()[2]);
}

TEST_CASE("the mixed state cannot beat random guessing") {
    TwoCoordState mixed = st(1, 2, 1, 2);
    for (ChannelSet set : {ChannelSet::rare, ChannelSet::bisto}) {
        RacOutcome out = optimal_bias(RacInstance::standard(mixed, set));
        CHECK(out.bias == E(0));
        CHECK(out.probability == E(1, 2));
    }
}

TEST_CASE("worked example: (3/4, 1/2) under reversible encodings") {
    TwoCoordState s = st(3, 4, 1, 2);
    RacInstance inst = RacInstance::standard(s, ChannelSet::rare);
    RacOutcome out = evaluate_strategy(inst, canonical_rare_encodings(s));
    CHECK(out.bias == E(1, 4));
    CHECK(out.probability == E(5, 8));
    REQUIRE(out.scores.size() == 8);
    for (const Scalar& sc : out.scores) CHECK(sc >= out.bias);
}

TEST_CASE("canonical encodings produce the advertised encoded states") {
    SUBCASE("reversible mixtures reach (±a, ±a)") {
        TwoCoordState s = st(3, 4, 3, 4);
        auto enc = canonical_rare_encodings(s);
        Vec v = s.state_vector();
        CHECK(enc[0].apply(v) == vec3(E(1, 2), E(1, 2), E(1)));
        CHECK(enc[1].apply(v) == vec3(E(-1, 2), E(1, 2), E(1)));
        CHECK(enc[2].apply(v) == vec3(E(1, 2), E(-1, 2), E(1)));
        CHECK(enc[3].apply(v) == vec3(E(-1, 2), E(-1, 2), E(1)));
    }
    SUBCASE("bistochastic compositions reach (±b, ±b)") {
        TwoCoordState s = st(3, 4, 1, 2);
        auto enc = canonical_bisto_encodings(s);
        Vec v = s.state_vector();
        CHECK(enc[0].apply(v) == vec3(E(1, 2), E(1, 2), E(1)));
        CHECK(enc[1].apply(v) == vec3(E(-1, 2), E(1, 2), E(1)));
        CHECK(enc[2].apply(v) == vec3(E(1, 2), E(-1, 2), E(1)));
        CHECK(enc[3].apply(v) == vec3(E(-1, 2), E(-1, 2), E(1)));
    }
    SUBCASE("mixed state encodes to itself") {
        TwoCoordState s = st(1, 2, 1, 2);
        for (const Channel& c : canonical_rare_encodings(s))
            CHECK(c.apply(s.state_vector()) == vec3(E(0), E(0), E(1)));
        for (const Channel& c : canonical_bisto_encodings(s))
            CHECK(c.apply(s.state_vector()) == vec3(E(0), E(0), E(1)));
    }
}

TEST_CASE("the optimizer matches the closed forms and the canonical strategies") {
    TwoCoordState s = st(4, 5, 3, 5);
    RacOutcome rare = optimal_bias(RacInstance::standard(s, ChannelSet::rare));
    CHECK(rare.bias == E(2, 5));  // (|2p-1| + |2q-1|)/2 = (3/5 + 1/5)/2
    RacOutcome bisto = optimal_bias(RacInstance::standard(s, ChannelSet::bisto));
    CHECK(bisto.bias == E(3, 5));  // max{3/5, 1/5}
    CHECK(evaluate_strategy(RacInstance::standard(s, ChannelSet::rare),
                            canonical_rare_encodings(s))
              .bias == rare.bias);
    CHECK(evaluate_strategy(RacInstance::standard(s, ChannelSet::bisto),
                            canonical_bisto_encodings(s))
              .bias == bisto.bias);
}

TEST_CASE("dominance on a grid with equality exactly on the diagonal") {
    for (long long pn = 0; pn <= 10; ++pn)
        for (long long qn = 0; qn <= 10; ++qn) {
            TwoCoordState s = st(pn, 10, qn, 10);
            Scalar rare = rare_bias_formula(s);
            Scalar bisto = bisto_bias_formula(s);
            CHECK(rare <= bisto);
            bool diagonal = (2 * s.p - 1).abs() == (2 * s.q - 1).abs();
            CHECK((rare == bisto) == diagonal);
        }
}

TEST_CASE("optimal bias is invariant under reversible preprocessing") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(0, 10);
    Model sq = Model::evengon(2);
    auto rev = reversible_channels(sq);
    for (int trial = 0; trial < 5; ++trial) {
        TwoCoordState s = st(num(rng), 10, num(rng), 10);
        Scalar base = optimal_bias(RacInstance::standard(s, ChannelSet::rare)).bias;
        for (const Channel& r : rev) {
            TwoCoordState moved = TwoCoordState::from_vector(r.apply(s.state_vector()));
            CHECK(optimal_bias(RacInstance::standard(moved, ChannelSet::rare)).bias == base);
        }
    }
}

TEST_CASE("bias formulas are 1-Lipschitz in the folded coordinates") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(0, 40);
    auto dist = [](const TwoCoordState& a, const TwoCoordState& b) {
        Scalar dx = ((2 * a.p - 1).abs() - (2 * b.p - 1).abs()).abs();
        Scalar dy = ((2 * a.q - 1).abs() - (2 * b.q - 1).abs()).abs();
        return dx > dy ? dx : dy;
    };
    for (int trial = 0; trial < 50; ++trial) {
        TwoCoordState a = st(num(rng), 40, num(rng), 40);
        TwoCoordState b = st(num(rng), 40, num(rng), 40);
        Scalar d = dist(a, b);
        CHECK((rare_bias_formula(a) - rare_bias_formula(b)).abs() <= d);
        CHECK((bisto_bias_formula(a) - bisto_bias_formula(b)).abs() <= d);
    }
}

TEST_CASE("encodings outside the declared set are rejected") {
    TwoCoordState s = st(3, 4, 1, 2);
    RacInstance inst = RacInstance::standard(s, ChannelSet::rare);
    auto enc = canonical_bisto_encodings(s);  // collapse maps are not RaRe
    CHECK_THROWS_AS(evaluate_strategy(inst, enc), DomainError);
}

TEST_CASE("the full channel set reaches a perfect score from any state") {
    RacOutcome out = optimal_bias(RacInstance::standard(st(1, 2, 1, 2), ChannelSet::full));
    CHECK(out.bias == E(1));
}

TEST_CASE("reference constants") {
    CHECK(kClassicalBias == 0.0);
    CHECK(kClassicalProbability == 0.5);
    CHECK(qubit_reference_probability() == doctest::Approx(0.8535533906));
}

#include <doctest.h>

#include <cmath>

#include "gptb/channel.hpp"
#include "gptb/model.hpp"

using namespace gptb;

namespace {
Scalar E(long long n, long long d = 1) { return Scalar::exact(n, d); }
}

TEST_CASE("the square model matches its figure data exactly") {
    Model sq = Model::evengon(2);
    REQUIRE(sq.state_vertices().size() == 4);
    CHECK(sq.state_vertices()[0] == vec3(E(1), E(1), E(1)));
    CHECK(sq.state_vertices()[1] == vec3(E(1), E(-1), E(1)));
    CHECK(sq.state_vertices()[2] == vec3(E(-1), E(-1), E(1)));
    CHECK(sq.state_vertices()[3] == vec3(E(-1), E(1), E(1)));

    CHECK(sq.effect("e1").functional == vec3(E(0), E(1, 2), E(1, 2)));
    CHECK(sq.effect("e2").functional == vec3(E(1, 2), E(0), E(1, 2)));
    CHECK(sq.effect("e3").functional == vec3(E(0), E(-1, 2), E(1, 2)));
    CHECK(sq.effect("e4").functional == vec3(E(-1, 2), E(0), E(1, 2)));
    CHECK(sq.effect("e5").functional == vec3(E(0), E(0), E(1)));
    CHECK(sq.effect("e0").functional == Vec::zeros(3, Scalar::Mode::exact));

    // e1 + e3 = u.
    CHECK(sq.effect("e1").functional + sq.effect("e3").functional ==
          sq.unit_effect().functional);
    validate_measurement(measurement_m13(sq), sq);
    validate_measurement(measurement_m24(sq), sq);
}

TEST_CASE("evengon invariants hold for a range of k") {
    for (unsigned k : {2u, 3u, 4u, 5u, 6u}) {
        Model m = Model::evengon(k, k == 2 ? Scalar::Mode::exact : Scalar::Mode::real);
        REQUIRE(m.state_vertices().size() == 2 * k);
        const Vec two_mixed = m.mixed_state() + m.mixed_state();
        for (unsigned i = 0; i < k; ++i) {
            // Central symmetry: w_{i+k} = -w_i + 2 w_m.
            Vec expected = two_mixed - m.state_vertices()[i];
            CHECK(eq_within(m.state_vertices()[i + k], expected, 1e-12));
        }
        for (const Effect& e : m.effects())
            for (const Vec& w : m.state_vertices()) {
                Scalar v = dot(e.functional, w);
                CHECK(leq_within(Scalar::zero(m.mode()), v, m.eps()));
                CHECK(leq_within(v, Scalar::one(m.mode()), m.eps()));
            }
        for (const Vec& w : m.state_vertices())
            CHECK(eq_within(dot(m.unit_effect().functional, w), Scalar::one(m.mode()), 1e-12));
        m.state_polytope().validate(m.eps());
    }
    CHECK_THROWS_AS(Model::evengon(1), DomainError);
    CHECK_THROWS_AS(Model::evengon(3, Scalar::Mode::exact), DomainError);
}

TEST_CASE("hexagon vertices sit at 60-degree steps") {
    Model hexa = Model::evengon(3);
    for (unsigned i = 1; i <= 6; ++i) {
        double a = M_PI * i / 3.0;
        CHECK(hexa.state_vertices()[i - 1][0].dbl() == doctest::Approx(std::cos(a)));
        CHECK(hexa.state_vertices()[i - 1][1].dbl() == doctest::Approx(std::sin(a)));
    }
}

TEST_CASE("fold_to_first_quadrant uses a reversible and is idempotent") {
    auto state = [](long long pn, long long pd, long long qn, long long qd) {
        return TwoCoordState(E(pn, pd), E(qn, qd));
    };
    SUBCASE("already folded: identity") {
        FoldResult f = fold_to_first_quadrant(state(9, 10, 7, 10));
        CHECK(f.state.p == E(9, 10));
        CHECK(f.state.q == E(7, 10));
        CHECK(f.used == Channel::identity(3, Scalar::Mode::exact));
    }
    SUBCASE("x reflection") {
        FoldResult f = fold_to_first_quadrant(state(1, 10, 7, 10));
        CHECK(f.state.p == E(9, 10));
        CHECK(f.state.q == E(7, 10));
        CHECK(f.used.apply(state(1, 10, 7, 10).state_vector()) == f.state.state_vector());
    }
    SUBCASE("point reflection") {
        FoldResult f = fold_to_first_quadrant(state(1, 5, 3, 10));
        CHECK(f.state.p == E(4, 5));
        CHECK(f.state.q == E(7, 10));
        CHECK(f.used.apply(state(1, 5, 3, 10).state_vector()) == f.state.state_vector());
    }
    SUBCASE("the fold preserves the coordinate distances from the center") {
        Model sq = Model::evengon(2);
        for (long long pn = 0; pn <= 8; ++pn)
            for (long long qn = 0; qn <= 8; ++qn) {
                TwoCoordState s(E(pn, 8), E(qn, 8));
                FoldResult f = fold_to_first_quadrant(s);
                CHECK((2 * f.state.p - 1).abs() == (2 * s.p - 1).abs());
                CHECK((2 * f.state.q - 1).abs() == (2 * s.q - 1).abs());
                // The fold channel is one of the eight reversibles.
                bool found = false;
                for (const Channel& r : reversible_channels(sq))
                    if (r == f.used) found = true;
                CHECK(found);
                // Idempotent.
                FoldResult again = fold_to_first_quadrant(f.state);
                CHECK(again.state.p == f.state.p);
                CHECK(again.used == Channel::identity(3, Scalar::Mode::exact));
            }
    }
}

TEST_CASE("minimal tensor composites multiply vertex counts") {
    Model sq = Model::evengon(2);
    Model two = Model::composite({sq, sq});
    CHECK(two.dim() == 9);
    CHECK(two.state_vertices().size() == 16);
    CHECK(dot(two.unit_effect().functional, kron(sq.state_vertices()[0], sq.state_vertices()[2])) ==
          E(1));
    Model three = Model::composite({sq, sq, sq});
    CHECK(three.dim() == 27);
    CHECK(three.state_vertices().size() == 64);
    CHECK_THROWS_AS(Model::composite({}), DomainError);
}

TEST_CASE("the entangled state is normalized, has mixed marginals, and is not separable") {
    Vec ent = pr_entangled_state();
    REQUIRE(ent.dim() == 9);
    CHECK(ent[8] == E(1));
    Vec mixed = vec3(E(0), E(0), E(1));
    CHECK(marginal(ent, 0) == mixed);
    CHECK(marginal(ent, 1) == mixed);

    Model sq = Model::evengon(2);
    Vec e1u = kron(sq.effect("e1").functional, sq.unit_effect().functional);
    Scalar val = dot(e1u, ent);
    CHECK(val >= E(0));
    CHECK(val <= E(1));
    CHECK(val == E(1, 2));

    Model two = Model::composite({sq, sq});
    auto res = hull_member(ent, two.state_vertices());
    CHECK_FALSE(res.inside);
    CHECK(res.separation->gap > E(0));
}

#include <doctest.h>

#include <random>

#include "gptb/resource.hpp"

using namespace gptb;

namespace {

Scalar E(long long n, long long d = 1) { return Scalar::exact(n, d); }

TwoCoordState st(long long pn, long long pd, long long qn, long long qd) {
    return TwoCoordState(E(pn, pd), E(qn, qd));
}

ProbVector pv(std::vector<Scalar> v) { return ProbVector(std::move(v)); }

}  // namespace

TEST_CASE("majorization basics") {
    CHECK(majorizes(pv({E(1), E(0)}), pv({E(1, 2), E(1, 2)})));
    CHECK(majorizes(pv({E(1, 2), E(1, 2)}), pv({E(1, 2), E(1, 2)})));
    // (0.5, 0.25, 0.25) and (0.4, 0.4, 0.2) are incomparable.
    ProbVector a = pv({E(1, 2), E(1, 4), E(1, 4)});
    ProbVector b = pv({E(2, 5), E(2, 5), E(1, 5)});
    CHECK_FALSE(majorizes(a, b));
    CHECK_FALSE(majorizes(b, a));
    CHECK_THROWS_AS(majorizes(pv({E(1)}), pv({E(1, 2), E(1, 2)})), DimensionError);
    CHECK_THROWS_AS(pv({E(1, 2), E(1, 4)}), DomainError);
    CHECK_THROWS_AS(pv({E(3, 2), E(-1, 2)}), DomainError);
}

TEST_CASE("convertibility criteria on the worked pairs") {
    CHECK(convertible_bisto(st(1, 1, 1, 1), st(1, 2, 1, 2)));
    CHECK(convertible_bisto(st(9, 10, 3, 5), st(4, 5, 4, 5)));
    CHECK_FALSE(convertible_bisto(st(7, 10, 3, 5), st(4, 5, 1, 2)));

    // The operational Birkhoff gap: possible under bisto, impossible under
    // reversible mixtures.
    CHECK_FALSE(convertible_rare(st(9, 10, 3, 5), st(4, 5, 4, 5)));
    CHECK(convertible_rare(st(9, 10, 7, 10), st(4, 5, 7, 10)));
    CHECK(convertible_rare(st(3, 10, 2, 5), st(3, 10, 2, 5)));
}

TEST_CASE("criteria agree with the LP oracle on a coarse grid") {
    std::vector<TwoCoordState> grid;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) grid.push_back(st(i, 6, j, 6));
    for (const auto& a : grid)
        for (const auto& b : grid) {
            CHECK(convertible_bisto(a, b) == convertible_oracle(a, b, ResourceSet::bisto));
            CHECK(convertible_rare(a, b) == convertible_oracle(a, b, ResourceSet::rare));
        }
}

TEST_CASE("reachable sets match the proof constructions") {
    SUBCASE("bistochastic square from (1/2, 4/5)") {
        auto verts = reachable_vertices(st(1, 2, 4, 5), ResourceSet::bisto);
        REQUIRE(verts.size() == 4);
        std::vector<Vec> want{vec3(E(3, 5), E(3, 5), E(1)), vec3(E(-3, 5), E(3, 5), E(1)),
                              vec3(E(3, 5), E(-3, 5), E(1)), vec3(E(-3, 5), E(-3, 5), E(1))};
        for (const Vec& w : want) {
            bool found = false;
            for (const Vec& v : verts)
                if (v == w) found = true;
            CHECK(found);
        }
    }
    SUBCASE("reversible octagon from (3/4, 9/10) has eight distinct vertices") {
        auto verts = reachable_vertices(st(3, 4, 9, 10), ResourceSet::rare);
        CHECK(verts.size() == 8);
    }
    SUBCASE("diagonal states degenerate to four vertices") {
        auto verts = reachable_vertices(st(4, 5, 4, 5), ResourceSet::rare);
        CHECK(verts.size() == 4);
    }
    SUBCASE("the mixed state reaches only itself") {
        CHECK(reachable_vertices(st(1, 2, 1, 2), ResourceSet::rare).size() == 1);
        CHECK(reachable_vertices(st(1, 2, 1, 2), ResourceSet::bisto).size() == 1);
    }
    SUBCASE("every reachable vertex is oracle-convertible; outside points are not") {
        TwoCoordState s = st(3, 4, 9, 10);
        for (ResourceSet set : {ResourceSet::bisto, ResourceSet::rare}) {
            for (const Vec& v : reachable_vertices(s, set))
                CHECK(convertible_oracle(s, TwoCoordState::from_vector(v), set));
            // Slightly beyond the best corner lies outside.
            CHECK_FALSE(convertible_oracle(s, st(91, 100, 91, 100), set));
        }
    }
}

TEST_CASE("binary entropy values and symmetry") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.25) == doctest::Approx(2.0 - 0.75 * std::log2(3.0)));
    CHECK(binary_entropy(0.25) == doctest::Approx(binary_entropy(0.75)));
    CHECK_THROWS_AS(binary_entropy(1.5), DomainError);
}

TEST_CASE("entropy monotones on named states") {
    CHECK(s_vn(st(1, 1, 1, 1)) == 0.0);
    CHECK(s_tot(st(1, 1, 1, 1)) == 0.0);
    CHECK(s_vn(st(1, 2, 1, 2)) == doctest::Approx(1.0));
    CHECK(s_tot(st(1, 2, 1, 2)) == doctest::Approx(2.0));
    CHECK(s_vn(st(3, 4, 1, 2)) == doctest::Approx(binary_entropy(0.75)));
    CHECK(s_tot(st(3, 4, 1, 2)) == doctest::Approx(binary_entropy(0.75) + 1.0));
    // Fold invariance of both monotones.
    CHECK(s_vn(st(1, 4, 1, 2)) == doctest::Approx(s_vn(st(3, 4, 1, 2))));
    CHECK(s_tot(st(1, 4, 1, 2)) == doctest::Approx(s_tot(st(3, 4, 1, 2))));
}

TEST_CASE("monotones never decrease along sampled channel actions") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> num(0, 60);
    std::uniform_int_distribution<int> wnum(0, 9);
    auto bisto = square_bisto_vertex_channels(Scalar::Mode::exact);
    auto rare = square_rare_vertex_channels(Scalar::Mode::exact);
    auto random_mix = [&](const std::vector<Channel>& verts) {
        Scalar total = E(0);
        std::vector<Scalar> w;
        for (size_t i = 0; i < verts.size(); ++i) {
            w.push_back(E(wnum(rng) + (i == 0 ? 1 : 0)));
            total += w.back();
        }
        Mat acc = (w[0] / total) * verts[0].matrix();
        for (size_t i = 1; i < verts.size(); ++i) acc = acc + (w[i] / total) * verts[i].matrix();
        return Channel::from_matrix(acc);
    };
    for (int trial = 0; trial < 100; ++trial) {
        TwoCoordState s = st(num(rng), 60, num(rng), 60);
        TwoCoordState sb = TwoCoordState::from_vector(random_mix(bisto).apply(s.state_vector()));
        CHECK(s_vn(sb) >= s_vn(s) - 1e-12);
        CHECK(s_vn_nondecreasing(s, sb));
        TwoCoordState sr = TwoCoordState::from_vector(random_mix(rare).apply(s.state_vector()));
        CHECK(s_vn_nondecreasing(s, sr));
        CHECK(s_tot(sr) >= s_tot(s) - 1e-12);
        CHECK(s_tot_nondecreasing_certified(s, sr));
    }
}

TEST_CASE("rare convertibility implies the 4-entry majorization") {
    std::mt19937_64 rng(131);
    std::uniform_int_distribution<int> num(0, 24);
    int convertible_count = 0;
    for (int trial = 0; trial < 400; ++trial) {
        TwoCoordState a = st(num(rng), 24, num(rng), 24);
        TwoCoordState b = st(num(rng), 24, num(rng), 24);
        if (!convertible_rare(a, b)) continue;
        ++convertible_count;
        CHECK(majorizes(rare_majorization_vector(a), rare_majorization_vector(b)));
    }
    CHECK(convertible_count > 0);
}

TEST_CASE("both convertibility relations are preorders") {
    std::mt19937_64 rng(137);
    std::uniform_int_distribution<int> num(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        TwoCoordState a = st(num(rng), 12, num(rng), 12);
        TwoCoordState b = st(num(rng), 12, num(rng), 12);
        TwoCoordState c = st(num(rng), 12, num(rng), 12);
        CHECK(convertible_bisto(a, a));
        CHECK(convertible_rare(a, a));
        if (convertible_bisto(a, b) && convertible_bisto(b, c)) CHECK(convertible_bisto(a, c));
        if (convertible_rare(a, b) && convertible_rare(b, c)) CHECK(convertible_rare(a, c));
    }
}

TEST_CASE("majorization implies lower entropy sums (Schur concavity spot check)") {
    std::mt19937_64 rng(139);
    std::uniform_int_distribution<int> num(1, 9);
    auto entropy_sum = [](const ProbVector& v) {
        double h = 0;
        for (const Scalar& x : v.entries()) {
            double d = x.to_double();
            if (d > 0) h -= d * std::log2(d);
        }
        return h;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Scalar> a, b;
        Scalar ta = E(0), tb = E(0);
        for (int i = 0; i < 4; ++i) {
            a.push_back(E(num(rng)));
            ta += a.back();
            b.push_back(E(num(rng)));
            tb += b.back();
        }
        for (auto& x : a) x /= ta;
        for (auto& x : b) x /= tb;
        ProbVector va(std::move(a)), vb(std::move(b));
        if (majorizes(va, vb)) CHECK(entropy_sum(va) <= entropy_sum(vb) + 1e-12);
    }
}

TEST_CASE("folded pair ordering invariant") {
    for (int pn = 0; pn <= 8; ++pn)
        for (int qn = 0; qn <= 8; ++qn) {
            FoldedPair f = folded_pair(st(pn, 8, qn, 8));
            CHECK(E(1, 2) <= f.delta);
            CHECK(f.delta <= f.eta);
            CHECK(f.eta <= E(1));
        }
}

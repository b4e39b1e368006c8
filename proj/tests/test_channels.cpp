#include <doctest.h>

#include <random>

#include "gptb/channel.hpp"

using namespace gptb;

namespace {

Scalar E(long long n, long long d = 1) { return Scalar::exact(n, d); }

Channel named(const std::string& s) { return parse_channel_name(s, Scalar::Mode::exact); }

}  // namespace

TEST_CASE("channel application matches the table's worked examples") {
    Model sq = Model::evengon(2);
    const auto& w = sq.state_vertices();

    Channel t11 = named("[g1+,g1+]");
    CHECK(t11.apply(w[1]) == w[0]);  // w2 -> w1
    CHECK(t11.apply(w[0]) == w[0]);
    CHECK(t11.apply(w[3]) == w[2]);

    Channel id = named("[g1+,g2+]");
    for (const Vec& v : w) CHECK(id.apply(v) == v);
    CHECK(id == Channel::identity(3, Scalar::Mode::exact));

    // Clockwise quarter rotation: w1 -> w2 -> w3 -> w4 -> w1.
    Channel rot = named("[g2+,g1-]");
    CHECK(rot.apply(w[0]) == w[1]);
    CHECK(rot.apply(w[1]) == w[2]);
    CHECK(rot.apply(w[2]) == w[3]);
    CHECK(rot.apply(w[3]) == w[0]);
}

TEST_CASE("admissibility is the image-in-polytope condition") {
    Model sq = Model::evengon(2);
    CHECK(is_admissible(named("[g1+,g2+]"), sq));
    CHECK_FALSE(is_admissible(Channel::from_rows(vec3(E(2), E(0), E(0)), vec3(E(0), E(1), E(0))), sq));
    for (const Channel& c : enumerate_extreme_channels(sq)) CHECK(is_admissible(c, sq));
}

TEST_CASE("square extreme channels are the 36 gamma pairs") {
    Model sq = Model::evengon(2);
    auto found = enumerate_extreme_channels(sq);
    REQUIRE(found.size() == 36);
    int named_count = 0;
    for (const Channel& c : found)
        if (channel_name(c, 1e-12)) ++named_count;
    CHECK(named_count == 36);
}

TEST_CASE("each square extreme channel is extremal (not a mixture of the rest)") {
    Model sq = Model::evengon(2);
    auto ext = enumerate_extreme_channels(sq);
    REQUIRE(ext.size() == 36);
    for (size_t i = 0; i < ext.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < ext.size(); ++j)
            if (j != i) others.push_back(ext[j].as_point());
        CHECK_FALSE(hull_contains(ext[i].as_point(), others));
    }
}

TEST_CASE("classification flags agree with the table") {
    Model sq = Model::evengon(2);

    ChannelClass c = classify(named("[g1+,g1+]"), sq);
    CHECK(c.admissible);
    CHECK(c.bistochastic);
    CHECK(c.extreme);
    CHECK_FALSE(c.reversible);
    CHECK(c.measure_and_prepare);

    ChannelClass rot = classify(named("[g2+,g1-]"), sq);
    CHECK(rot.reversible);
    CHECK(rot.bistochastic);
    CHECK(rot.extreme);
    CHECK_FALSE(rot.measure_and_prepare);

    ChannelClass cst = classify(named("[g3+,g3+]"), sq);
    CHECK_FALSE(cst.bistochastic);
    CHECK(cst.extreme);
    CHECK(cst.measure_and_prepare);

    CHECK_THROWS_AS(classify(Channel::from_rows(vec3(E(2), E(0), E(0)), vec3(E(0), E(1), E(0))), sq),
                    DomainError);

    // Extreme iff returned by the enumeration: check a mixture is not.
    Channel mix = Channel::from_rows(vec3(E(1, 2), E(0), E(0)), vec3(E(0), E(1, 2), E(0)));
    CHECK_FALSE(classify(mix, sq).extreme);
}

TEST_CASE("reversible channels are exactly the vertex-permuting extremes") {
    Model sq = Model::evengon(2);
    auto rev = reversible_channels(sq);
    REQUIRE(rev.size() == 8);
    for (const Channel& r : rev) CHECK(classify(r, sq).reversible);
    size_t rev_among_ext = 0;
    for (const Channel& c : enumerate_extreme_channels(sq))
        if (classify(c, sq).reversible) {
            ++rev_among_ext;
            bool found = false;
            for (const Channel& r : rev)
                if (r == c) found = true;
            CHECK(found);
        }
    CHECK(rev_among_ext == 8);
}

TEST_CASE("evengon reversibles permute the gon's vertices") {
    for (unsigned k : {3u, 4u}) {
        Model m = Model::evengon(k);
        auto rev = reversible_channels(m);
        REQUIRE(rev.size() == 4 * k);
        for (const Channel& r : rev) {
            std::vector<bool> hit(2 * k, false);
            for (const Vec& w : m.state_vertices()) {
                auto idx = m.vertex_index(r.apply(w));
                REQUIRE(idx.has_value());
                CHECK_FALSE(hit[*idx]);
                hit[*idx] = true;
            }
        }
    }
}

TEST_CASE("rare and bisto membership with certificates") {
    Model sq = Model::evengon(2);
    // Mixture of two reversibles is random-reversible.
    Channel mix = Channel::from_rows(vec3(E(0), E(0), E(0)), vec3(E(0), E(0), E(0)));
    MembershipReport in = in_rare(mix, sq);
    CHECK(in.member);
    REQUIRE(in.weights.has_value());
    Vec recombined = Vec::zeros(6, Scalar::Mode::exact);
    auto rev = reversible_channels(sq);
    for (size_t i = 0; i < rev.size(); ++i)
        recombined = recombined + (*in.weights)[i] * rev[i].as_point();
    CHECK(recombined == mix.as_point());

    MembershipReport out = in_rare(named("[g1+,g1+]"), sq);
    CHECK_FALSE(out.member);
    CHECK(out.separation->gap > E(0));
    CHECK_FALSE(in_rare(named("[g2+,g2+]"), sq).member);

    CHECK(in_bisto(named("[g1+,g1+]"), sq).member);
    CHECK(in_bisto(named("[g1+,g2+]"), sq).member);
    CHECK_FALSE(in_bisto(named("[g3+,g3+]"), sq).member);
}

TEST_CASE("bisto extreme channels fix the mixed state under random mixing") {
    Model sq = Model::evengon(2);
    auto bisto = bisto_extreme_channels(sq);
    REQUIRE(bisto.size() == 16);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(0, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Mat acc = Mat::zeros(3, 3, Scalar::Mode::exact);
        Scalar total = E(0);
        std::vector<Scalar> w;
        for (size_t i = 0; i < bisto.size(); ++i) {
            w.push_back(E(num(rng) + (i == 0 ? 1 : 0)));
            total += w.back();
        }
        for (size_t i = 0; i < bisto.size(); ++i) acc = acc + (w[i] / total) * bisto[i].matrix();
        Channel mixc = Channel::from_matrix(acc);
        CHECK(mixc.apply(sq.mixed_state()) == sq.mixed_state());
    }
}

TEST_CASE("the birkhoff gap of the square has eight certified entries") {
    Model sq = Model::evengon(2);
    auto gap = birkhoff_gap(sq);
    REQUIRE(gap.size() == 8);
    for (const GapEntry& g : gap) {
        auto nm = channel_name(g.channel, 1e-12);
        REQUIRE(nm.has_value());
        // Collapse-type channels: both rows pick the same axis.
        CHECK((*nm)[2] == (*nm)[6]);
        CHECK(g.separation.gap > E(0));
    }
}

TEST_CASE("collision certificates exist exactly for colliding channels") {
    Model sq = Model::evengon(2);
    auto cert = collision_certificate(named("[g1+,g1+]"), sq);
    REQUIRE(cert.has_value());
    CHECK(cert->a == 1);
    CHECK(cert->b == 2);
    CHECK(cert->c == 1);
    CHECK(cert->bistochastic);

    CHECK_FALSE(collision_certificate(named("[g1+,g2+]"), sq).has_value());

    // Soundness: a certified bistochastic channel is not random-reversible.
    for (const Channel& c : bisto_extreme_channels(sq)) {
        auto cc = collision_certificate(c, sq);
        if (cc && cc->bistochastic) CHECK_FALSE(in_rare(c, sq).member);
    }
}

TEST_CASE("the evengon collapse maps collide and fix the mixed state") {
    for (unsigned k : {2u, 3u, 4u, 5u, 6u}) {
        Model m = Model::evengon(k, k == 2 ? Scalar::Mode::exact : Scalar::Mode::real);
        Channel c = evengon_collapse_map(k);
        auto cert = collision_certificate(c, m);
        REQUIRE(cert.has_value());
        CHECK(cert->a == 1);
        CHECK(cert->b == 2);
        CHECK(cert->c == 1);
        CHECK(cert->bistochastic);
    }
    // k = 2 reduces to the first collapse channel of the table.
    CHECK(evengon_collapse_map(2) == named("[g1+,g1+]"));
    // k = 3: w5 -> w4 follows automatically (w5 = w1 - w2 + w4).
    Model hexa = Model::evengon(3);
    Channel c3 = evengon_collapse_map(3);
    CHECK(eq_within(c3.apply(hexa.state_vertices()[4]), hexa.state_vertices()[3], 1e-12));
}

TEST_CASE("measure-and-prepare assembly reduces to the expected tables") {
    Model sq = Model::evengon(2);
    const auto& w = sq.state_vertices();
    CHECK(measure_prepare_channel(measurement_m24(sq), {w[0], w[2]}, sq) == named("[g1+,g1+]"));
    CHECK(measure_prepare_channel(measurement_m13(sq), {w[0], w[2]}, sq) == named("[g2+,g2+]"));
    Measurement trivial{{sq.effect("e5")}};
    CHECK(measure_prepare_channel(trivial, {w[0]}, sq) == named("[g3+,g3+]"));
    CHECK_THROWS_AS(measure_prepare_channel(measurement_m13(sq), {w[0]}, sq), DimensionError);
}

TEST_CASE("tensor channels factorize and act on the entangled state") {
    Model sq = Model::evengon(2);
    const auto& w = sq.state_vertices();
    Channel t = named("[g1+,g1+]");
    Channel id = Channel::identity(3, Scalar::Mode::exact);

    CHECK(tensor_channel({t, id}).apply(kron(w[0], w[1])) == kron(t.apply(w[0]), w[1]));
    CHECK(tensor_channel({t, t}).apply(kron(w[1], w[1])) == kron(w[0], w[0]));

    Vec out = tensor_channel({t, id}).apply(pr_entangled_state());
    CHECK(out == E(1, 2) * (kron(w[0], w[2]) + kron(w[2], w[0])));
    CHECK_THROWS_AS(tensor_channel({}), DomainError);
}

TEST_CASE("tensor products of reversibles permute the product vertices") {
    Model sq = Model::evengon(2);
    Model two = Model::composite({sq, sq});
    auto rev = reversible_channels(sq);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<size_t> pick(0, rev.size() - 1);
    for (int trial = 0; trial < 6; ++trial) {
        Channel t = tensor_channel({rev[pick(rng)], rev[pick(rng)]});
        std::vector<bool> hit(two.state_vertices().size(), false);
        for (const Vec& v : two.state_vertices()) {
            auto idx = two.vertex_index(t.apply(v));
            REQUIRE(idx.has_value());
            CHECK_FALSE(hit[*idx]);
            hit[*idx] = true;
        }
    }
}

TEST_CASE("channel name grammar round-trips") {
    for (const std::string& s : {"[g1+,g1-]", "[g2+,g3-]", "[g3+,g3+]"}) {
        Channel c = parse_channel_name(s, Scalar::Mode::exact);
        CHECK(channel_name(c, 1e-12) == s);
    }
    CHECK(parse_channel_name(" [ g1+ , g2+ ] ", Scalar::Mode::exact) ==
          Channel::identity(3, Scalar::Mode::exact));
    CHECK_THROWS_AS(parse_channel_name("[g4+,g1-]", Scalar::Mode::exact), ParseError);
    CHECK_THROWS_AS(parse_channel_name("nonsense", Scalar::Mode::exact), ParseError);
}

TEST_CASE("hexagon: the same machinery reports the gap") {
    Model hexa = Model::evengon(3);
    auto rev = reversible_channels(hexa);
    CHECK(rev.size() == 12);
    auto gap = birkhoff_gap(hexa);
    CHECK_FALSE(gap.empty());
    for (const GapEntry& g : gap) {
        CHECK(is_admissible(g.channel, hexa));
        CHECK(eq_within(g.channel.apply(hexa.mixed_state()), hexa.mixed_state(), 1e-9));
        CHECK(g.separation.gap.to_double() > 0);
    }
    // The hexagon collapse map is one of the reported gap channels.
    Channel c3 = evengon_collapse_map(3);
    bool found = false;
    for (const GapEntry& g : gap)
        if (eq_within(g.channel, c3, 1e-7)) found = true;
    CHECK(found);
}

TEST_CASE("enumeration cap refuses oversized gons unless overridden") {
    Model big = Model::evengon(5);
    CHECK_THROWS_AS(enumerate_extreme_channels(big), EnumerationCapError);
}

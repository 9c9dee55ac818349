#include <cmath>

#include "doctest.h"
#include "macsim/probability.hpp"
#include "macsim/rng.hpp"
#include "test_util.hpp"

using namespace macsim;
using namespace macsim::testutil;

TEST_CASE("pmf construction canonicalizes and validates") {
    Pmf p({"b", "a"}, {0.25, 0.75});
    CHECK(p.alphabet()[0] == "a");
    CHECK(p[0] == doctest::Approx(0.75));
    CHECK_THROWS(Pmf({"a", "b"}, {0.6, 0.5}));
    CHECK_THROWS(Pmf({"a", "a"}, {0.5, 0.5}));
    CHECK_THROWS(Pmf({"a", "b"}, {-0.1, 1.1}));
    Pmf n({"a", "b"}, {2.0, 6.0}, true);
    CHECK(n[0] == doctest::Approx(0.25));
}

TEST_CASE("tv distance examples") {
    Pmf u({"0", "1"}, {0.5, 0.5});
    CHECK(tv_distance(u, u) == doctest::Approx(0.0));
    CHECK(tv_distance(Pmf({"0", "1"}, {1.0, 0.0}), Pmf({"0", "1"}, {0.0, 1.0})) ==
          doctest::Approx(1.0));
    CHECK(tv_distance(Pmf({"0", "1"}, {0.75, 0.25}), u) == doctest::Approx(0.25));
    CHECK_THROWS(tv_distance(u, Pmf({"0", "x"}, {0.5, 0.5})));
}

TEST_CASE("tv distance is a metric") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Pmf p = random_pmf("s", 5, rng), q = random_pmf("s", 5, rng),
            r = random_pmf("s", 5, rng);
        double pq = tv_distance(p, q);
        CHECK(pq >= 0.0);
        CHECK(pq == doctest::Approx(tv_distance(q, p)));
        CHECK(tv_distance(p, p) <= 1e-12);
        CHECK(pq <= tv_distance(p, r) + tv_distance(r, q) + 1e-12);
    }
}

TEST_CASE("data processing inequality under push-forward") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        Channel w = random_channel("x", 4, "y", 3, rng);
        Pmf p = random_pmf("x", 4, rng), q = random_pmf("x", 4, rng);
        CHECK(tv_distance(push_forward(w, p), push_forward(w, q)) <=
              tv_distance(p, q) + 1e-12);
    }
}

TEST_CASE("channel tv modes") {
    Channel id = Channel::identity({"0", "1"});
    Channel c0 = Channel::constant({"0", "1"}, Pmf({"0", "1"}, {1.0, 0.0}));
    CHECK(channel_tv(id, id, TvMode::max()) == doctest::Approx(0.0));
    CHECK(channel_tv(id, c0, TvMode::max()) == doctest::Approx(1.0));
    CHECK(channel_tv(id, c0, TvMode::average(Pmf({"0", "1"}, {1.0, 0.0}))) ==
          doctest::Approx(0.0));
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Channel a = random_channel("x", 3, "y", 4, rng);
        Channel b = random_channel("x", 3, "y", 4, rng);
        Pmf in = random_pmf("x", 3, rng);
        CHECK(channel_tv(a, b, TvMode::average(in)) <=
              channel_tv(a, b, TvMode::max()) + 1e-12);
    }
}

TEST_CASE("induced joint matches nested-loop oracle") {
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        Decomposition d;
        d.aux1 = random_channel("x", 2, "u", 2, rng);
        d.aux2 = random_channel("v", 2, "w", 2, rng);
        std::vector<std::vector<double>> dec_rows;
        for (int k = 0; k < 4; ++k) dec_rows.push_back(random_simplex(2, rng));
        d.decoder = flatten_decoder(d.aux1.output_alphabet(), d.aux2.output_alphabet(),
                                    {"0", "1"}, dec_rows);
        Pmf q1 = random_pmf("x", 2, rng), q2 = random_pmf("v", 2, rng);
        Joint j = induced_joint(q1, q2, d);

        auto idx = decoder_index_map(d.decoder, d.aux1.output_alphabet(),
                                     d.aux2.output_alphabet());
        for (int x1 = 0; x1 < 2; ++x1) {
            for (int x2 = 0; x2 < 2; ++x2) {
                for (int y = 0; y < 2; ++y) {
                    double expect = 0.0;
                    for (int u1 = 0; u1 < 2; ++u1) {
                        for (int u2 = 0; u2 < 2; ++u2) {
                            expect += q1[x1] * q2[x2] * d.aux1.row(x1)[u1] *
                                      d.aux2.row(x2)[u2] * d.decoder.row(idx[u1][u2])[y];
                        }
                    }
                    CHECK(j.prob({x1, x2, y}) == doctest::Approx(expect).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("xor decomposition induces the xor mac") {
    Decomposition d = xor_decomposition();
    Pmf u = Pmf::uniform({"0", "1"});
    Joint j = induced_joint(u, u, d);
    MacChannel target = xor_mac();
    Joint jt = mac_joint(u, u, target);
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
            for (int y = 0; y < 2; ++y) {
                CHECK(j.prob({x1, x2, y}) == doctest::Approx(jt.prob({x1, x2, y})));
                double expect = (y == (x1 ^ x2)) ? 0.25 : 0.0;
                CHECK(jt.prob({x1, x2, y}) == doctest::Approx(expect));
            }
        }
    }
}

TEST_CASE("mac joint point mass and oracle") {
    Rng rng(15);
    MacChannel m = random_mac(2, 2, 2, rng);
    Pmf p1 = Pmf::point_mass({"a0", "a1"}, "a1");
    Pmf q2 = random_pmf("b", 2, rng);
    Joint j = mac_joint(p1, q2, m);
    for (int x2 = 0; x2 < 2; ++x2) {
        for (int y = 0; y < 2; ++y) {
            CHECK(j.prob({0, x2, y}) == doctest::Approx(0.0));
            CHECK(j.prob({1, x2, y}) == doctest::Approx(q2[x2] * m.prob(1, x2, y)));
        }
    }
}

TEST_CASE("joint marginals recover the product inputs") {
    Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        Decomposition d;
        d.aux1 = random_channel("x", 3, "u", 2, rng);
        d.aux2 = random_channel("v", 2, "w", 3, rng);
        std::vector<std::vector<double>> dec_rows;
        for (int k = 0; k < 6; ++k) dec_rows.push_back(random_simplex(2, rng));
        d.decoder = flatten_decoder(d.aux1.output_alphabet(), d.aux2.output_alphabet(),
                                    {"0", "1"}, dec_rows);
        Pmf q1 = random_pmf("x", 3, rng), q2 = random_pmf("v", 2, rng);
        Joint j = induced_joint(q1, q2, d);
        Pmf m1 = j.marginal_pmf(0), m2 = j.marginal_pmf(1);
        for (int i = 0; i < 3; ++i) CHECK(m1[i] == doctest::Approx(q1[i]).epsilon(1e-12));
        for (int i = 0; i < 2; ++i) CHECK(m2[i] == doctest::Approx(q2[i]).epsilon(1e-12));
    }
}

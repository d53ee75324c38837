#include "doctest.h"
#include "fixtures.hpp"
#include "strathom/cylinders.hpp"
#include "strathom/fos.hpp"
#include "strathom/homology.hpp"

using namespace strathom;

TEST_CASE("recognition") {
    Poset P = Poset::chain(3);
    CHECK(is_fos(simplex_set(P, {0, 1, 2})));
    CHECK(is_fos(simplex_set(P, {0, 0, 1})));
    CHECK(is_nonsingular(fx::two_edge_circle()));
    CHECK(!is_fos(fx::two_edge_circle()));
    CHECK(!is_nonsingular(fx::loop()));
    CHECK(!is_fos(fx::loop()));
    CHECK(is_fos(fx::arc_circle()));
    CHECK(!is_fos(fx::point_circle()));
}

TEST_CASE("fos implies nonsingular and sd of nonsingular is fos") {
    std::mt19937 rng(3);
    Poset P = Poset::chain(2);
    int nonsingular = 0;
    for (int t = 0; t < 60; ++t) {
        SSet X = fx::random_fos(rng, P, 4, 2, 2);
        // glue a parallel copy of a random edge to break FOS sometimes
        if (t % 2) {
            SSet Y(X.poset_ptr());
            for (int c = 0; c < X.size(); ++c) Y.add_cell(X.id(c), X.dim(c), X.cell(c).faces, X.dim(c) == 0 ? X.label(c) : -1);
            for (int c = 0; c < X.size(); ++c)
                if (X.dim(c) == 1) {
                    Y.add_cell(X.id(c) + "'", 1, X.cell(c).faces);
                    break;
                }
            Y.finalize();
            X = Y;
        }
        if (X.size() > 8) continue;
        if (is_fos(X)) CHECK(is_nonsingular(X));
        if (is_nonsingular(X)) {
            ++nonsingular;
            CHECK(is_fos(sd(X).S));
        }
    }
    CHECK(nonsingular > 10);
    CHECK(is_fos(sd(fx::two_edge_circle()).S));
}

static void check_mcx(const SSet& K, const SSet& Kp, const SMap& f) {
    Mcx m = mcx(K, Kp, f);
    CHECK(validate(m.M).empty());
    CHECK(is_fos(m.M));
    CHECK(check_map(m.sdKp.S, m.M, m.from_target).empty());
    CHECK(check_map(m.sdK.S, m.M, m.from_source).empty());
    CHECK(check_map(m.M, m.sdKp.S, m.retraction).empty());
    CHECK(compose(m.from_target, m.retraction).img == identity_map(m.sdKp.S).img);
    std::string why;
    CHECK_MESSAGE(certificate_ok(m.M, m.pairing, &why), why);
    CHECK(base_matches(m.from_target, m.pairing));
    CHECK(euler(m.M) == euler(Kp));
}

TEST_CASE("join cylinder") {
    Poset P = Poset::chain(2);
    SUBCASE("identity of a point is an edge") {
        SSet pt = fx::points(1, 0, P);
        Mcx m = mcx(pt, pt, identity_map(pt));
        CHECK(m.M.count_by_dim() == std::vector<int>{2, 1});
        check_mcx(pt, pt, identity_map(pt));
    }
    SUBCASE("two points to one") {
        SSet two = fx::points(2, 0, P), one = fx::points(1, 0, P);
        SMap f{{nd(0, 0), nd(0, 0)}};
        Mcx m = mcx(two, one, f);
        CHECK(m.M.count_by_dim() == std::vector<int>{3, 2});
        CHECK(m.M.cofaces()[0].size() == 2);
        check_mcx(two, one, f);
    }
    SUBCASE("boundary of an edge to a point") {
        SSet E = simplex_set(P, {0, 1});
        SSet B = subset(E, boundary_mask(E));
        SSet pt = fx::points(1, 1, P);
        // not stratum preserving: the 0-labelled vertex cannot go to a 1-labelled point
        CHECK_THROWS_AS(mcx(B, pt, SMap{{nd(0, 0), nd(0, 0)}}), Error);
        SSet B0 = subset(simplex_set(P, {0, 0}), boundary_mask(simplex_set(P, {0, 0})));
        SSet p0 = fx::points(1, 0, P);
        check_mcx(B0, p0, SMap{{nd(0, 0), nd(0, 0)}});
    }
    SUBCASE("identity of a simplex and the last-vertex collapse of an edge") {
        for (const DFlag& J : {DFlag{0, 1}, DFlag{0, 0, 1}}) {
            SSet X = simplex_set(P, J);
            check_mcx(X, X, identity_map(X));
        }
        SSet E = simplex_set(P, {0, 0});
        SSet pt = fx::points(1, 0, P);
        check_mcx(E, pt, SMap{{nd(0, 0), nd(0, 0), Simplex{{0, 0}, 0}}});
    }
    SUBCASE("inclusion of a face") {
        SSet T = simplex_set(P, {0, 0, 1});
        std::vector<char> keep(T.size(), 0);
        keep[T.index("0")] = keep[T.index("2")] = keep[T.index("02")] = 1;
        check_mcx(subset(T, keep), T, inclusion_map(T, keep));
    }
    SUBCASE("non-FOS input is rejected") {
        SSet C = fx::two_edge_circle();
        CHECK_THROWS_AS(mcx(C, C, identity_map(C)), Error);
    }
}

static void check_to_fos(const SSet& X) {
    FosResult r = to_fos(X);
    CHECK(is_fos(r.K));
    CHECK(r.K.dim() == X.dim());
    auto diags = verify(r.cert);
    CHECK_MESSAGE(diags.empty(), (diags.empty() ? "" : diags.front().message));
    for (const Leg& leg : r.cert.legs) {
        CHECK(leg.kind == Leg::Kind::presentation);
        CHECK(replay(leg.B, leg.pres).empty());
    }
    CHECK(betti_z2(r.K) == betti_z2(X));
    CHECK(strata_betti(r.K) == strata_betti(X));
}

TEST_CASE("conversion to fos") {
    SUBCASE("already fos") {
        SSet X = simplex_set(Poset::chain(2), {0, 1});
        FosResult r = to_fos(X);
        CHECK(r.subdivisions == 0);
        CHECK(r.cert.legs.empty());
        CHECK(verify(r.cert).empty());
    }
    SUBCASE("two edge circle") {
        FosResult r = to_fos(fx::two_edge_circle());
        CHECK(r.subdivisions == 1);
        CHECK(r.K.count_by_dim() == std::vector<int>{4, 4});
        check_to_fos(fx::two_edge_circle());
    }
    SUBCASE("loop and point circle") {
        check_to_fos(fx::loop());
        check_to_fos(fx::point_circle());
    }
    SUBCASE("degenerate flags") {
        for (const DFlag& J : {DFlag{0, 0}, DFlag{0, 0, 1}, DFlag{0, 1, 1}}) {
            SSet X = fx::collapsed_simplex(J);
            REQUIRE(validate(X).empty());
            check_to_fos(X);
        }
    }
}

TEST_CASE("conversion of random singular sets") {
    std::mt19937 rng(23);
    Poset P = Poset::chain(2);
    int singular = 0;
    for (int t = 0; t < 20; ++t) {
        SSet X = fx::random_sset(rng, P, 5, 2, 3, 2);
        REQUIRE(validate(X).empty());
        singular += !is_nonsingular(X);
        CAPTURE(t);
        check_to_fos(X);
    }
    CHECK(singular > 0);
}

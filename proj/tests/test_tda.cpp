#include "doctest.h"
#include "strathom/fos.hpp"
#include "strathom/homology.hpp"
#include "strathom/reduce.hpp"
#include "strathom/tda.hpp"

#include <random>
#include <sstream>

using namespace strathom;

static LabeledPointCloud square(int singular = -1) {
    LabeledPointCloud c;
    c.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    c.labels = {1, 1, 1, 1};
    if (singular >= 0) c.labels[singular] = 0;
    return c;
}

static LabeledPointCloud parse(const std::string& s) {
    std::istringstream in(s);
    return parse_points(in, "test.csv");
}

TEST_CASE("csv") {
    auto c = parse("x,y,label\n0,0,1\n1,0.5,0\n\n2,1e-3,1\n");
    CHECK(c.points.size() == 3);
    CHECK(c.labels == std::vector<int>{1, 0, 1});
    CHECK(c.points[2][1] == doctest::Approx(1e-3));
    CHECK(parse("").points.empty());
    CHECK_THROWS_WITH_AS(parse("x,y\n0,0\n"), doctest::Contains("missing label column"), Error);
    CHECK_THROWS_WITH_AS(parse("x,y,label\n0,0,1\n0,zz,1\n"), doctest::Contains("test.csv:3"), Error);
    CHECK_THROWS_WITH_AS(parse("x,y,label\n0,0,1\n0,1\n"), doctest::Contains("test.csv:3"), Error);
    CHECK_THROWS_AS(parse("x,label\n0,-1\n"), Error);
    CHECK_THROWS_AS(load_points("/nonexistent/points.csv"), Error);
}

TEST_CASE("unit square") {
    SSet full = vietoris_rips(square(), 1.5, 3);
    CHECK(full.size() == 15);
    CHECK(full.count_by_dim() == std::vector<int>{4, 6, 4, 1});
    CHECK(is_fos(full));
    SSet cyc = vietoris_rips(square(), 1.0, 3);
    CHECK(cyc.count_by_dim() == std::vector<int>{4, 4});
    CHECK(betti_z2(cyc) == std::vector<int>{1, 1});
    // ties at epsilon are included
    CHECK(vietoris_rips(square(), std::sqrt(2.0), 1).count_by_dim() == std::vector<int>{4, 6});
    CHECK(vietoris_rips(square(), 1.5, 1).count_by_dim() == std::vector<int>{4, 6});
    CHECK(vietoris_rips(square(), 1.5, 0).count_by_dim() == std::vector<int>{4});

    SSet sing = vietoris_rips(square(2), 1.5, 3);
    CHECK(is_fos(sing));
    const int v2 = sing.index("v2");
    for (int c = 0; c < sing.size(); ++c) {
        const auto& v = sing.vertices(c);
        if (std::find(v.begin(), v.end(), v2) != v.end()) CHECK(v.front() == v2);
    }
    CHECK(sing.find("v2.v0.v1.v3") >= 0);
    CHECK_THROWS_AS(vietoris_rips(square(), 0, 1), Error);
    LabeledPointCloud bad = square();
    bad.points[1] = {1, 0, 0};
    CHECK_THROWS_AS(vietoris_rips(bad, 1, 1), Error);
}

TEST_CASE("monotone in epsilon and the singular part is the singular VR") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 20; ++t) {
        LabeledPointCloud c;
        for (int i = 0; i < 9; ++i) {
            c.points.push_back({u(rng), u(rng), u(rng)});
            c.labels.push_back(rng() % 3 == 0 ? 0 : 1);
        }
        const double e1 = 0.2 + 0.3 * u(rng), e2 = e1 + 0.2 * u(rng);
        SSet a = vietoris_rips(c, e1, 3), b = vietoris_rips(c, e2, 3, 4);
        CHECK(is_fos(a));
        for (int x = 0; x < a.size(); ++x) CHECK(b.find(a.id(x)) >= 0);

        LabeledPointCloud sub;
        std::vector<int> idx;
        for (int i = 0; i < 9; ++i)
            if (c.labels[i] == 0) {
                sub.points.push_back(c.points[i]);
                sub.labels.push_back(0);
                idx.push_back(i);
            }
        SSet s = vietoris_rips(sub, e1, 3, Poset::chain(2));
        std::vector<std::string> expect;
        for (int x = 0; x < s.size(); ++x) {
            std::string id;
            for (int v : s.vertices(x)) id += (id.empty() ? "v" : ".v") + std::to_string(idx[std::stoi(s.id(v).substr(1))]);
            expect.push_back(id);
        }
        std::vector<std::string> got;
        for (int x = 0; x < a.size(); ++x)
            if (a.max_label(x) == 0) got.push_back(a.id(x));
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
}

TEST_CASE("reduction of the square") {
    auto r = reduce(vietoris_rips(square(), 1.0, 2));
    CHECK(r.report.moves == 0);
    CHECK(betti_z2(r.X) == std::vector<int>{1, 1});
    auto f = reduce(vietoris_rips(square(), 1.5, 3));
    CHECK(verify(f.cert).empty());
    CHECK(euler(f.X) == 1);
    auto b = betti_z2(f.X);
    b.resize(4, 0);
    CHECK(b == std::vector<int>{1, 0, 0, 0});
    CHECK(f.X.size() == 1);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "strathom/homology.hpp"

using namespace strathom;

// Dense elimination over Z/2 on the full normalized boundary matrices.
static std::vector<int> dense_betti(const SSet& X) {
    const int top = X.dim();
    std::vector<std::vector<int>> by(top + 1);
    for (int c = 0; c < X.size(); ++c) by[X.dim(c)].push_back(c);
    auto rank = [&](int n) {
        if (n <= 0 || n > top) return 0;
        std::vector<std::vector<int>> m;
        for (int c : by[n]) {
            std::vector<int> row(by[n - 1].size(), 0);
            for (const auto& f : X.cell(c).faces)
                if (f.nondegenerate()) {
                    const auto at = std::find(by[n - 1].begin(), by[n - 1].end(), f.cell) - by[n - 1].begin();
                    row[at] ^= 1;
                }
            m.push_back(row);
        }
        int r = 0;
        const int cols = static_cast<int>(by[n - 1].size());
        for (int col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(m.size()); ++i)
                if (m[i][col]) piv = i;
            if (piv < 0) continue;
            std::swap(m[piv], m[r]);
            for (int i = 0; i < static_cast<int>(m.size()); ++i)
                if (i != r && m[i][col])
                    for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
            ++r;
        }
        return r;
    };
    std::vector<int> b(top + 1);
    for (int n = 0; n <= top; ++n) b[n] = static_cast<int>(by[n].size()) - rank(n) - rank(n + 1);
    return b;
}

TEST_CASE("small examples") {
    Poset P1 = Poset::chain(1);
    SSet circle = complex_from_simplices(P1, {"a", "b", "c"}, {0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(betti_z2(circle) == std::vector<int>{1, 1});
    CHECK(betti_z2(simplex_set(Poset::chain(2), {0, 0, 1})) == std::vector<int>{1, 0, 0});
    SSet D3 = simplex_set(P1, {0, 0, 0, 0});
    SSet sphere = subset(D3, boundary_mask(D3));
    CHECK(betti_z2(sphere) == std::vector<int>{1, 0, 1});
    CHECK(betti_z2(fx::loop()) == std::vector<int>{1, 1});
    CHECK(betti_z2(fx::two_edge_circle()) == std::vector<int>{1, 1});
    SSet empty(P1);
    empty.finalize();
    CHECK(betti_z2(empty).empty());
}

TEST_CASE("euler") {
    Poset P = Poset::chain(1);
    for (int n = 0; n <= 4; ++n) CHECK(euler(simplex_set(P, DFlag(n + 1, 0))) == 1);
    SSet T = simplex_set(P, {0, 0, 0});
    CHECK(euler(subset(T, boundary_mask(T))) == 0);
    auto sum = coproduct(T, fx::loop());
    CHECK(euler(sum.S) == euler(T) + euler(fx::loop()));
    SSet E = simplex_set(Poset::chain(2), {0, 1});
    CHECK(strata_euler(E) == std::vector<int>{1, 0});
}

TEST_CASE("strata") {
    Poset P = Poset::chain(3);
    SSet E = simplex_set(P, {0, 1});
    auto s = strata_betti(E);
    CHECK(s.absolute[0] == std::vector<int>{1, 0});
    CHECK(s.relative[0] == std::vector<int>{1, 0});
    CHECK(s.absolute[1] == std::vector<int>{1, 0});
    CHECK(s.relative[1] == std::vector<int>{0, 0});
    // nothing is labelled 2
    CHECK(s.absolute[2] == std::vector<int>{0, 0});
    CHECK(s.relative[2] == std::vector<int>{0, 0});

    // the two circle models have equal tables
    CHECK(strata_betti(fx::arc_circle()) == strata_betti(fx::point_circle()));
    auto c = strata_betti(fx::point_circle());
    CHECK(c.relative[1] == std::vector<int>{0, 1});
    CHECK(c.absolute[1] == std::vector<int>{1, 0});
}

TEST_CASE("agrees with dense elimination") {
    std::mt19937 rng(17);
    Poset P = Poset::chain(2);
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        SSet X = t % 2 ? fx::random_fos(rng, P, 6, 3, 4) : fx::random_sset(rng, P, 6, 3, 4, 3);
        if (X.size() > 50) continue;
        ++tested;
        CHECK(betti_z2(X) == dense_betti(X));
        auto b = betti_z2(X);
        int e = 0;
        for (size_t n = 0; n < b.size(); ++n) e += n % 2 ? -b[n] : b[n];
        CHECK(e == euler(X));
        // relative tables sum to the Euler characteristic
        auto st = strata_betti(X);
        int es = 0;
        for (const auto& row : st.relative)
            for (size_t n = 0; n < row.size(); ++n) es += n % 2 ? -row[n] : row[n];
        CHECK(es == euler(X));
    }
    CHECK(tested > 100);
}

// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any criterion fails.
#include "fixtures.hpp"
#include "strathom/cylinders.hpp"
#include "strathom/fos.hpp"
#include "strathom/homology.hpp"
#include "strathom/pairing.hpp"
#include "strathom/subdivision.hpp"
#include "strathom/tda.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace strathom;

namespace {

// All comparisons below are exact; the only floating point input is the VR scale.
constexpr double kSquareSmallEps = 1.0;
constexpr double kSquareLargeEps = 1.5;
constexpr int kConservationSets = 200;
constexpr int kConservationMaxCells = 200;
constexpr int kFosSets = 50;
constexpr int kRestrictionTrials = 40;
constexpr int kStrictSearchDepth = 3;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

Outcome admissibility_table() {
    Outcome o;
    Poset P = Poset::chain(2);
    int checked = 0;
    for (int len = 1; len <= 3; ++len)
        for (const DFlag& J : all_dflags(P, len))
            for (int k = 0; k < len; ++k) {
                const bool rep = (k > 0 && J[k - 1] == J[k]) || (k + 1 < len && J[k + 1] == J[k]);
                bool top = true;
                for (int p : J) top = top && P.leq(p, J[k]);
                if (is_admissible(J, k) != rep || is_strictly_admissible(P, J, k) != (rep && top))
                    o.fail("table mismatch");
                ++checked;
            }
    struct Row {
        DFlag J;
        int k;
        bool adm, strict;
    };
    for (const Row& r : {Row{{0, 0, 1}, 0, true, false}, Row{{0, 1, 1}, 2, true, true}, Row{{0, 0, 1}, 2, false, false},
                         Row{{0, 1, 1}, 0, false, false}})
        if (is_admissible(r.J, r.k) != r.adm || is_strictly_admissible(P, r.J, r.k) != r.strict)
            o.fail("figure case disagrees");
    if (o.ok) o.detail = std::to_string(checked) + " (flag, k) pairs, four figure cases";
    return o;
}

Outcome two_circle() {
    Outcome o;
    Deformation d = fx::two_circle_zigzag();
    std::vector<std::vector<char>> strict;
    auto diags = verify(d, &strict);
    if (!diags.empty()) o.fail("certificate: " + diags.front().message);
    int n_strict = 0;
    for (const auto& leg : strict)
        for (char s : leg) n_strict += s;
    if (n_strict != 1) o.fail(std::to_string(n_strict) + " strict steps");
    if (!fx::same_betti(*d.from, *d.to))
        o.fail("Betti tables differ");
    if (fx::strict_path_exists(*d.from, *d.to, kStrictSearchDepth) ||
        fx::strict_path_exists(*d.to, *d.from, kStrictSearchDepth))
        o.fail("strict path found");
    if (o.ok) o.detail = "3 moves verify, 1 strict, no strict path within depth " + std::to_string(kStrictSearchDepth);
    return o;
}

Outcome canonical_certificates() {
    Outcome o;
    int n = 0;
    auto check = [&](const Certified& c, const std::string& what) {
        ++n;
        std::string why;
        if (!certificate_ok(c.B, c.pairing, &why)) o.fail(what + ": " + why);
        if (!base_matches(c.incl, c.pairing) || !check_map(c.A, c.B, c.incl).empty()) o.fail(what + ": base");
    };
    for (const Poset& P : fx::small_posets())
        for (int len = 1; len <= 4; ++len)
            for (const DFlag& J : all_dflags(P, len)) {
                for (int k = 0; k < len; ++k) {
                    if (!is_admissible(J, k)) continue;
                    check(degeneracy_section(P, J, k), "degeneracy section");
                    for (int m = 0; m <= 2; ++m) check(pushout_product(P, J, k, m), "pushout product");
                }
                check(sd_section(P, J), "sd section");
                if (dflag_nondegenerate_core(J).size() == J.size()) check(sdp_section(P, J), "sd_P section");
            }
    if (o.ok) o.detail = std::to_string(n) + " certificates over 8 posets";
    return o;
}

Outcome subdivision_counts() {
    Outcome o;
    for (int n = 0; n <= 4; ++n) {
        DFlag J(n + 1, 0);
        auto got = sd(unfiltered_simplex(n)).S.count_by_dim();
        int fact = 1;
        for (int i = 2; i <= n + 1; ++i) fact *= i;
        if (got != fx::chain_oracle(Poset::chain(1), J, false) || got.back() != fact)
            o.fail("sd(D" + std::to_string(n) + ")");
    }
    Poset P2 = Poset::chain(2), P3 = Poset::chain(3);
    if (sd_p(simplex_set(P2, {0, 1})).S.count_by_dim() != std::vector<int>{4, 3}) o.fail("sd_P(D^(0,1))");
    auto big = sd_p(simplex_set(P3, {0, 1, 2})).S.count_by_dim();
    if (big != fx::chain_oracle(P3, {0, 1, 2}, true)) o.fail("sd_P(D^(0,1,2))");
    if (o.ok) {
        std::ostringstream s;
        s << "sd(D^n) n<=4, sd_P(D^(0,1,2)) =";
        for (int x : big) s << ' ' << x;
        o.detail = s.str();
    }
    return o;
}

Outcome section_identities() {
    Outcome o;
    int n = 0;
    for (const Poset& P : fx::small_posets())
        for (int len = 1; len <= 3; ++len)
            for (const DFlag& J : all_dflags(P, len)) {
                SSet X = simplex_set(P, J);
                Certified s = sd_section(P, J);
                if (!is_isomorphism(s.A, X, compose(s.incl, lv(X, sd(X))))) o.fail("lv o sd_section");
                ++n;
                if (dflag_nondegenerate_core(J).size() != J.size()) continue;
                Certified t = sdp_section(P, J);
                if (!is_isomorphism(t.A, X, compose(t.incl, lv_p(X, sd_p(X))))) o.fail("lv_p o sdp_section");
                ++n;
            }
    std::vector<std::pair<SSet, std::vector<char>>> suite;
    SSet K = simplex_set(Poset::chain(2), {0, 1});
    std::vector<char> v0(K.size(), 0);
    v0[K.index("0")] = 1;
    suite.push_back({K, v0});
    suite.push_back({K, std::vector<char>(K.size(), 0)});
    suite.push_back({K, std::vector<char>(K.size(), 1)});
    std::mt19937 rng(101);
    for (int t = 0; t < 10; ++t) {
        SSet X = fx::random_fos(rng, Poset::chain(3), 6, 3, 4);
        std::vector<char> A(X.size());
        for (int c = 0; c < X.size(); ++c) A[c] = X.max_label(c) == 0;
        suite.push_back({X, A});
    }
    int rel = 0;
    for (const auto& [X, A] : suite) {
        auto r = sd_rel(X, A);
        if (compose(r.l0, r.l1).img != lv(X, r.sdK).img) o.fail("l1 o l0 != lv");
        auto f = sd_family(X, {A, A});
        if (compose(f.l0, f.l1).img != lv_iterated(X, f.levels).img) o.fail("family l1 o l0 != lv^2");
        rel += 2;
    }
    if (o.ok) o.detail = std::to_string(n) + " sections, " + std::to_string(rel) + " relative factorizations";
    return o;
}

Outcome conservation() {
    Outcome o;
    std::mt19937 rng(202);
    Poset P = Poset::chain(3);
    int sets = 0, moves = 0;
    while (sets < kConservationSets) {
        SSet X = fx::random_fos(rng, P, 6 + static_cast<int>(rng() % 7), 3, 3 + static_cast<int>(rng() % 10));
        if (X.size() > kConservationMaxCells || !is_fos(X)) continue;
        ++sets;
        const int chi = euler(X);
        auto r = reduce(X);
        SSet cur = X;
        for (MoveRecord rec : r.cert.legs.empty() ? std::vector<MoveRecord>{} : r.cert.legs[0].moves) {
            cur = apply_move(cur, rec);
            ++moves;
            if (euler(cur) != chi) o.fail("chi changed");
            if (!fx::same_betti(cur, X)) o.fail("Betti changed at " + rec.top);
        }
        if (!verify(r.cert).empty()) o.fail("certificate");
    }
    if (o.ok) o.detail = std::to_string(sets) + " complexes, " + std::to_string(moves) + " collapses";
    return o;
}

Outcome fos_conversion() {
    Outcome o;
    std::vector<SSet> inputs{fx::two_edge_circle(), fx::loop(), fx::point_circle()};
    for (const DFlag& J : {DFlag{0, 0}, DFlag{0, 0, 1}, DFlag{0, 1, 1}}) inputs.push_back(fx::collapsed_simplex(J));
    std::mt19937 rng(303);
    while (static_cast<int>(inputs.size()) < kFosSets)
        inputs.push_back(fx::random_sset(rng, Poset::chain(2 + static_cast<int>(rng() % 2)), 6, 2 + static_cast<int>(rng() % 2), 3, 8));
    int singular = 0;
    for (const SSet& X : inputs) {
        singular += !is_fos(X);
        FosResult r = to_fos(X);
        if (!is_fos(r.K)) o.fail("result not FOS");
        if (r.K.dim() != X.dim()) o.fail("dimension changed");
        auto d = verify(r.cert);
        if (!d.empty()) o.fail("certificate: " + d.front().message);
        if (!fx::same_betti(r.K, X)) o.fail("Betti changed");
    }
    if (o.ok) o.detail = std::to_string(inputs.size()) + " sets, " + std::to_string(singular) + " not FOS on input";
    return o;
}

Outcome tda_pipeline() {
    Outcome o;
    LabeledPointCloud sq;
    sq.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.labels = {1, 1, 1, 1};
    auto cyc = reduce(vietoris_rips(sq, kSquareSmallEps, 3));
    if (betti_z2(cyc.X) != std::vector<int>{1, 1}) o.fail("4-cycle Betti");
    auto full = reduce(vietoris_rips(sq, kSquareLargeEps, 3));
    auto b = betti_z2(full.X);
    b.resize(4, 0);
    if (euler(full.X) != 1 || b != std::vector<int>{1, 0, 0, 0}) o.fail("3-simplex does not reduce to a point");
    if (!verify(full.cert).empty()) o.fail("certificate");

    sq.labels[0] = 0;
    for (double eps : {kSquareSmallEps, kSquareLargeEps}) {
        SSet X = vietoris_rips(sq, eps, 3);
        auto r = reduce(X);
        SSet cur = X;
        for (const Leg& leg : r.cert.legs)
            for (MoveRecord rec : leg.moves) {
                if (!is_admissible(cur.flag(cur.index(rec.top)), rec.k)) o.fail("inadmissible collapse");
                cur = apply_move(cur, rec);
            }
        // the label-0 part is the VR complex of the singular points alone
        int low = 0;
        for (int c = 0; c < X.size(); ++c) low += X.max_label(c) == 0;
        if (low != 1 || X.max_label(X.index("v0")) != 0) o.fail("singular subcomplex");
        if (!fx::same_betti(r.X, X)) o.fail("strata Betti changed");
    }
    if (o.ok) o.detail = "4-cycle Betti (1,1), 3-simplex to a point, singular vertex respected";
    return o;
}

Outcome finite_restriction() {
    Outcome o;
    auto c = sd_section(Poset::chain(1), {0, 0, 0});
    const SSet& B = c.B;
    std::mt19937 rng(404);
    for (int t = 0; t < kRestrictionTrials; ++t) {
        std::vector<char> C(B.size(), 0);
        const int picks = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < picks; ++i) C[rng() % B.size()] = 1;
        C = face_closure(B, C);
        auto r = restrict_finite(B, c.pairing, C);
        std::string why;
        if (!check_regular(r.Bmid, r.first).regular || !check_regular(B, r.second).regular) o.fail("not regular");
        if (!certificate_ok(r.Bmid, r.first, &why) || !certificate_ok(B, r.second, &why)) o.fail(why);
        const auto n = pairing_to_presentation(r.Bmid, r.first).steps.size() +
                       pairing_to_presentation(B, r.second).steps.size();
        if (n != 9) o.fail("lengths sum to " + std::to_string(n));
    }
    if (o.ok) o.detail = std::to_string(kRestrictionTrials) + " random C, lengths sum to 9";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"admissibility table", admissibility_table},
        {"two-circle zigzag", two_circle},
        {"canonical certificates", canonical_certificates},
        {"subdivision counts", subdivision_counts},
        {"last vertex and section identities", section_identities},
        {"conservation under collapse", conservation},
        {"FOS conversion", fos_conversion},
        {"TDA pipeline", tda_pipeline},
        {"finite restriction", finite_restriction},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %zu %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), s);
        all = all && o.ok;
    }
    return all ? 0 : 1;
}

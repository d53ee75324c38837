#pragma once

#include "strathom/homology.hpp"
#include "strathom/moves.hpp"
#include "strathom/reduce.hpp"
#include "strathom/sset.hpp"

#include <map>
#include <set>

#include <functional>
#include <random>

namespace fx {

using namespace strathom;

// Every poset with at most three elements, up to isomorphism.
inline std::vector<Poset> small_posets() {
    return {Poset::chain(1),
            Poset::chain(2),
            Poset::antichain(2),
            Poset::chain(3),
            Poset::antichain(3),
            Poset({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}}),
            Poset({"0", "1", "2"}, {{"0", "2"}, {"1", "2"}}),
            Poset({"0", "1", "2"}, {{"0", "1"}})};
}

// Chains of subsets of [n] by length, with an optional label attached to each entry. For the
// labelled version J gives vertex labels and every label must occur in the first subset.
inline std::vector<int> chain_oracle(const Poset& P, const DFlag& J, bool labelled) {
    const int n = static_cast<int>(J.size());
    std::vector<std::pair<unsigned, int>> items;
    for (unsigned s = 1; s < (1u << n); ++s) {
        if (!labelled) {
            items.emplace_back(s, 0);
            continue;
        }
        for (int p = 0; p < P.size(); ++p) items.emplace_back(s, p);
    }
    std::vector<int> count;
    std::vector<std::pair<unsigned, int>> cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (!cur.empty()) {
            // labels must lie over the first subset
            bool ok = true;
            if (labelled)
                for (const auto& [s, p] : cur) {
                    bool hit = false;
                    for (int v = 0; v < n; ++v) hit = hit || ((cur.front().first >> v & 1) && J[v] == p);
                    ok = ok && hit;
                }
            if (!ok) return;
            if (count.size() < cur.size()) count.resize(cur.size(), 0);
            ++count[cur.size() - 1];
        }
        for (size_t i = 0; i < items.size(); ++i) {
            if (!cur.empty()) {
                auto [s, p] = cur.back();
                auto [t, q] = items[i];
                if ((s & t) != s || !P.leq(p, q) || (s == t && p == q)) continue;
            }
            cur.push_back(items[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return count;
}

// Delta^J with the repeated vertices of J identified, for J in {(0,0), (0,0,1), (0,1,1)} over 0 < 1.
inline SSet collapsed_simplex(const DFlag& J) {
    SSet X(Poset::chain(2));
    X.add_cell("v", 0, {}, J[0]);
    if (J.size() == 2) {
        X.add_cell("e", 1, {nd(0, 0), nd(0, 0)});
    } else if (J == DFlag{0, 0, 1}) {
        X.add_cell("w", 0, {}, 1);
        X.add_cell("l", 1, {nd(0, 0), nd(0, 0)});
        X.add_cell("a", 1, {nd(1, 0), nd(0, 0)});
        X.add_cell("t", 2, {nd(3, 1), nd(3, 1), nd(2, 1)});
    } else {
        X.add_cell("w", 0, {}, 1);
        X.add_cell("l", 1, {nd(1, 0), nd(1, 0)});
        X.add_cell("a", 1, {nd(1, 0), nd(0, 0)});
        X.add_cell("t", 2, {nd(2, 1), nd(3, 1), nd(3, 1)});
    }
    X.finalize();
    return X;
}

// Betti vectors are padded to dim + 1; compare them up to trailing zeros.
inline std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}
inline bool same_betti(const SSet& X, const SSet& Y) {
    if (trimmed(betti_z2(X)) != trimmed(betti_z2(Y))) return false;
    const auto a = strata_betti(X), b = strata_betti(Y);
    for (size_t p = 0; p < a.relative.size(); ++p)
        if (trimmed(a.relative[p]) != trimmed(b.relative[p]) || trimmed(a.absolute[p]) != trimmed(b.absolute[p]))
            return false;
    return true;
}

// one vertex, one edge
inline SSet loop(int label = 0, Poset P = Poset::chain(1)) {
    SSet X(std::move(P));
    X.add_cell("v", 0, {}, label);
    X.add_cell("e", 1, {nd(0, 0), nd(0, 0)});
    X.finalize();
    return X;
}

// two vertices a, b and two parallel edges a -> b
inline SSet two_edge_circle(int la = 0, int lb = 0, Poset P = Poset::chain(1)) {
    SSet X(std::move(P));
    X.add_cell("a", 0, {}, la);
    X.add_cell("b", 0, {}, lb);
    X.add_cell("e", 1, {nd(1, 0), nd(0, 0)});
    X.add_cell("f", 1, {nd(1, 0), nd(0, 0)});
    X.finalize();
    return X;
}

inline SSet points(int n, int label = 0, Poset P = Poset::chain(1)) {
    SSet X(std::move(P));
    for (int i = 0; i < n; ++i) X.add_cell("p" + std::to_string(i), 0, {}, label);
    X.finalize();
    return X;
}

// Random ordered complex on nv vertices with labels in a chain; simplices ordered by (label, index),
// so the result is FOS.
inline SSet random_fos(std::mt19937& rng, const Poset& P, int nv, int max_dim, int tries) {
    std::uniform_int_distribution<int> lab(0, P.size() - 1);
    std::vector<int> labels(nv);
    for (auto& l : labels) l = lab(rng);
    std::vector<int> order(nv);
    for (int i = 0; i < nv; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> rank(nv);
    for (int i = 0; i < nv; ++i) rank[order[i]] = i;
    std::vector<std::vector<int>> simplices;
    std::uniform_int_distribution<int> dd(1, max_dim);
    for (int t = 0; t < tries; ++t) {
        int d = dd(rng);
        std::vector<int> s(nv);
        for (int i = 0; i < nv; ++i) s[i] = i;
        std::shuffle(s.begin(), s.end(), rng);
        s.resize(std::min(nv, d + 1));
        std::sort(s.begin(), s.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        simplices.push_back(s);
    }
    std::vector<std::string> ids;
    for (int i = 0; i < nv; ++i) ids.push_back("v" + std::to_string(i));
    return complex_from_simplices(P, ids, labels, simplices);
}

// A random_fos complex with some same-labelled vertices identified: loops, parallel edges and
// simplices on degenerate-looking flags appear.
inline SSet random_sset(std::mt19937& rng, const Poset& P, int nv, int max_dim, int tries, int merges) {
    SSet X = random_fos(rng, P, nv, max_dim, tries);
    std::vector<int> to(X.size());
    for (int c = 0; c < X.size(); ++c) to[c] = c;
    for (int m = 0; m < merges; ++m) {
        int u = static_cast<int>(rng() % X.size()), w = static_cast<int>(rng() % X.size());
        if (X.dim(u) || X.dim(w) || X.label(u) != X.label(w) || to[u] != u || to[w] != w || u == w) continue;
        to[w] = u;
    }
    SSet Y(X.poset_ptr());
    std::vector<int> at(X.size(), -1);
    for (int c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0 && to[c] != c) continue;
        std::vector<Simplex> faces;
        for (auto f : X.cell(c).faces) {
            if (X.dim(f.cell) == 0)
                while (to[f.cell] != f.cell) f.cell = to[f.cell];
            f.cell = at[f.cell];
            faces.push_back(f);
        }
        at[c] = Y.add_cell(X.id(c), X.dim(c), std::move(faces), X.dim(c) == 0 ? X.label(c) : -1);
    }
    Y.finalize();
    return Y;
}

// Map from a horn (or any small set) given by cell id -> image.
inline SMap by_id(const SSet& H, const std::map<std::string, Simplex>& img) {
    SMap f;
    for (int c = 0; c < H.size(); ++c) f.img.push_back(img.at(H.id(c)));
    return f;
}

// Circle over 0 < 1 whose 0-stratum is an arc: a(0) -g-> c(0), a -h-> b(1), c -i-> b.
inline SSet arc_circle() {
    SSet X(Poset::chain(2));
    X.add_cell("a", 0, {}, 0);
    X.add_cell("c", 0, {}, 0);
    X.add_cell("b", 0, {}, 1);
    X.add_cell("g", 1, {nd(1, 0), nd(0, 0)});
    X.add_cell("h", 1, {nd(2, 0), nd(0, 0)});
    X.add_cell("i", 1, {nd(2, 0), nd(1, 0)});
    X.finalize();
    return X;
}

// Circle over 0 < 1 whose 0-stratum is a point: c(0) with two edges i, j to b(1).
inline SSet point_circle() {
    SSet X(Poset::chain(2));
    X.add_cell("c", 0, {}, 0);
    X.add_cell("b", 0, {}, 1);
    X.add_cell("i", 1, {nd(1, 0), nd(0, 0)});
    X.add_cell("j", 1, {nd(1, 0), nd(0, 0)});
    X.finalize();
    return X;
}

// arc_circle -> point_circle: fill the triangle acb along a new edge j, push it off through h, then
// retract the arc g onto c. Only the last move is strict.
inline Deformation two_circle_zigzag() {
    SSet R = arc_circle();
    const Poset& P = R.poset();
    HornSpec h{{0, 0, 1}, 0};
    SSet H = horn(P, h);
    auto v = [&](const char* id) { return nd(R.index(id), 0); };
    auto e = [&](const char* id) { return nd(R.index(id), 1); };
    SMap attach = by_id(H, {{"0", v("a")}, {"1", v("c")}, {"2", v("b")}, {"01", e("g")}, {"02", e("h")}});
    auto [S1, m1] = expand(R, h, attach, "T", "j");
    auto [S2, m2] = collapse(S1, S1.index("T"), S1.index("h"), 1);
    auto [S3, m3] = collapse(S2, S2.index("g"), S2.index("a"), 1);
    Deformation d;
    d.from = R;
    d.to = point_circle();
    Leg leg;
    leg.moves = {m1, m2, m3};
    d.legs.push_back(std::move(leg));
    return d;
}

inline std::vector<std::vector<int>> vertex_sets_by_label(const SSet& X) {
    std::vector<std::vector<int>> out(X.poset().size());
    for (int c = 0; c < X.size(); ++c)
        if (X.dim(c) == 0) out[X.label(c)].push_back(c);
    return out;
}

// All strict moves out of X: strict collapses, and strict expansions along horns of dimension <= 2
// whose vertices land on existing vertices (edges may land on degenerate edges).
inline std::vector<MoveRecord> strict_moves(const SSet& X) {
    std::vector<MoveRecord> out;
    for (const auto& fp : find_free_pairs(X, {}, true)) out.push_back(collapse(X, fp.top, fp.face, fp.k).second);
    const Poset& P = X.poset();
    std::vector<DFlag> flags;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b) {
            if (!P.leq(a, b)) continue;
            if (a == b) flags.push_back({a, b});
            for (int c = 0; c < P.size(); ++c)
                if (P.leq(b, c)) flags.push_back({a, b, c});
        }
    const auto co = X.cofaces();
    // simplices (nondegenerate or degenerate) spanning an ordered vertex pair
    auto edges_between = [&](int u, int w) {
        std::vector<Simplex> r;
        if (u == w) r.push_back(Simplex{{0, 0}, u});
        for (int e : co[u])
            if (X.dim(e) == 1 && X.face(e, 1).cell == u && X.face(e, 0).cell == w) r.push_back(nd(e, 1));
        return r;
    };
    for (const DFlag& J : flags) {
        const int n = static_cast<int>(J.size()) - 1;
        for (int k = 0; k <= n; ++k) {
            if (!is_strictly_admissible(P, J, k)) continue;
            HornSpec hs{J, k};
            SSet H = horn(P, hs);
            std::vector<int> hv;
            for (int c = 0; c < H.size(); ++c)
                if (H.dim(c) == 0) hv.push_back(c);
            std::vector<int> choice(hv.size());
            std::function<void(size_t)> rec = [&](size_t i) {
                if (i < hv.size()) {
                    for (int x = 0; x < X.size(); ++x)
                        if (X.dim(x) == 0 && X.label(x) == H.label(hv[i])) {
                            choice[i] = x;
                            rec(i + 1);
                        }
                    return;
                }
                std::vector<int> he;
                std::vector<std::vector<Simplex>> opts;
                for (int c = 0; c < H.size(); ++c) {
                    if (H.dim(c) != 1) continue;
                    const int s = std::find(hv.begin(), hv.end(), H.face(c, 1).cell) - hv.begin();
                    const int t = std::find(hv.begin(), hv.end(), H.face(c, 0).cell) - hv.begin();
                    he.push_back(c);
                    opts.push_back(edges_between(choice[s], choice[t]));
                }
                std::vector<size_t> pick(he.size(), 0);
                for (;;) {
                    SMap f;
                    f.img.resize(H.size());
                    for (size_t j = 0; j < hv.size(); ++j) f.img[hv[j]] = nd(choice[j], 0);
                    bool empty = false;
                    for (size_t j = 0; j < he.size(); ++j) {
                        if (opts[j].empty()) {
                            empty = true;
                            break;
                        }
                        f.img[he[j]] = opts[j][pick[j]];
                    }
                    if (empty) return;
                    if (check_map(H, X, f).empty()) out.push_back(expand(X, hs, f).second);
                    size_t j = 0;
                    while (j < he.size() && ++pick[j] == opts[j].size()) pick[j++] = 0;
                    if (j == he.size()) return;
                }
            };
            // a 1-dimensional horn is a single vertex; its edge set is empty
            rec(0);
        }
    }
    return out;
}

// Breadth-first search through strict moves from X; true if a set isomorphic to Y appears within depth moves.
inline bool strict_path_exists(const SSet& X, const SSet& Y, int depth) {
    std::vector<SSet> frontier{X};
    for (int d = 0; d <= depth; ++d) {
        std::vector<SSet> next;
        for (const SSet& S : frontier) {
            if (S.size() == Y.size() && S.count_by_dim() == Y.count_by_dim() && find_isomorphism(S, Y)) return true;
            if (d == depth) continue;
            for (MoveRecord m : strict_moves(S)) next.push_back(apply_move(S, m));
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace fx

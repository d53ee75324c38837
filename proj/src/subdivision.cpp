#include "strathom/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace strathom {

std::string mask_string(Mask m) { return std::to_string(m); }

static Mask full_mask(int n) { return n >= 63 ? ~Mask(0) : (Mask(1) << (n + 1)) - 1; }
static int top_bit(Mask m) { return 63 - std::countl_zero(m); }

static std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    for (int b = 0; m; ++b, m >>= 1)
        if (m & 1) out.push_back(b);
    return out;
}

int Subdivision::lookup(int x, const std::vector<Mask>& chain) const {
    auto it = by_chain.find({x, chain});
    if (it == by_chain.end()) throw Error(ErrorKind::precondition, "chain outside the subdivision");
    return it->second;
}

int Subdivision::lookup(int x, const std::vector<Mask>& chain, const std::vector<int>& p) const {
    auto it = by_pchain.find({x, chain, p});
    if (it == by_pchain.end()) throw Error(ErrorKind::precondition, "chain outside the subdivision");
    return it->second;
}

// Restrict x to the vertex subset `sub` (local mask) and push every chain entry through the
// resulting surjection. Returns the target cell and the pushed masks (not yet deduplicated).
static int push_chain(const SSet& X, const Simplex& x, Mask sub, const std::vector<Mask>& chain,
                      std::vector<Mask>& pushed) {
    std::vector<int> inj = bits_of(sub);
    Simplex y = X.apply(x, inj);
    pushed.clear();
    for (Mask m : chain) {
        Mask t = 0;
        for (size_t pos = 0; pos < inj.size(); ++pos)
            if (m >> inj[pos] & 1) t |= Mask(1) << y.eta[pos];
        pushed.push_back(t);
    }
    return y.cell;
}

Subdivision sd(const SSet& X) {
    Subdivision r;
    std::vector<Subdivision::Info> cells;
    for (int x = 0; x < X.size(); ++x) {
        const int n = X.dim(x);
        if (n > 30) throw Error(ErrorKind::parameter, "cell dimension too large to subdivide");
        std::vector<Mask> chain{full_mask(n)};
        std::function<void()> rec = [&]() {
            std::vector<Mask> c(chain.rbegin(), chain.rend());
            cells.push_back({x, c, {}});
            Mask cur = chain.back();
            // proper nonempty submasks of cur
            for (Mask s = (cur - 1) & cur; s; s = (s - 1) & cur) {
                chain.push_back(s);
                rec();
                chain.pop_back();
            }
        };
        rec();
    }
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
        if (a.x != b.x) return a.x < b.x;
        return a.chain < b.chain;
    });
    for (size_t i = 0; i < cells.size(); ++i) r.by_chain.emplace(std::make_pair(cells[i].x, cells[i].chain), int(i));
    r.S = SSet(X.poset_ptr());
    std::vector<Mask> pushed;
    for (const auto& ci : cells) {
        const int k = static_cast<int>(ci.chain.size()) - 1;
        std::vector<Simplex> faces;
        for (int i = 0; i < k; ++i) {
            std::vector<Mask> c = ci.chain;
            c.erase(c.begin() + i);
            faces.push_back(nd(r.lookup(ci.x, c), k - 1));
        }
        if (k > 0) {
            std::vector<Mask> head(ci.chain.begin(), ci.chain.end() - 1);
            int y = push_chain(X, nd(ci.x, X.dim(ci.x)), ci.chain[k - 1], head, pushed);
            std::vector<Mask> u;
            Mono eta;
            for (Mask m : pushed) {
                if (u.empty() || u.back() != m) u.push_back(m);
                eta.push_back(static_cast<int>(u.size()) - 1);
            }
            faces.push_back(Simplex{eta, r.lookup(y, u)});
        }
        std::string id = X.id(ci.x) + "|";
        for (size_t j = 0; j < ci.chain.size(); ++j) id += (j ? "," : "") + mask_string(ci.chain[j]);
        r.S.add_cell(id, k, std::move(faces), k == 0 ? X.max_label(ci.x) : -1);
    }
    std::vector<int> order;
    for (int x = 0; x < X.size(); ++x) order.push_back(r.lookup(x, {full_mask(X.dim(x))}));
    r.S.set_label_order(order);
    r.S.finalize();
    r.info = std::move(cells);
    return r;
}

SMap lv(const SSet& X, const Subdivision& s) {
    SMap f;
    for (const auto& ci : s.info) {
        Mono theta;
        for (Mask m : ci.chain) theta.push_back(top_bit(m));
        f.img.push_back(X.apply(nd(ci.x, X.dim(ci.x)), theta));
    }
    return f;
}

SMap sd_map(const SSet& X, const Subdivision& sX, const SSet& Y, const Subdivision& sY, const SMap& f) {
    (void)Y;
    SMap g;
    for (const auto& ci : sX.info) {
        const Simplex& img = f.img[ci.x];
        std::vector<Mask> u;
        Mono eta;
        for (Mask m : ci.chain) {
            Mask t = 0;
            for (int b : bits_of(m)) t |= Mask(1) << img.eta[b];
            if (u.empty() || u.back() != t) u.push_back(t);
            eta.push_back(static_cast<int>(u.size()) - 1);
        }
        g.img.push_back(Simplex{eta, sY.lookup(img.cell, u)});
    }
    (void)X;
    return g;
}

Subdivision sd_p(const SSet& X) {
    Subdivision r;
    const Poset& P = X.poset();
    std::vector<Subdivision::Info> cells;
    for (int x = 0; x < X.size(); ++x) {
        const int n = X.dim(x);
        if (n > 30) throw Error(ErrorKind::parameter, "cell dimension too large to subdivide");
        const Mask full = full_mask(n);
        std::vector<int> vlab;
        for (int v : X.vertices(x)) vlab.push_back(X.label(v));
        for (Mask s0 = 1; s0 <= full; ++s0) {
            std::vector<int> L;
            for (int b : bits_of(s0))
                if (std::find(L.begin(), L.end(), vlab[b]) == L.end()) L.push_back(vlab[b]);
            std::sort(L.begin(), L.end());
            std::vector<Mask> cm;
            std::vector<int> cp;
            std::function<void()> rec = [&]() {
                Mask s = cm.back();
                int p = cp.back();
                if (s == full) cells.push_back({x, cm, cp});
                // supersets of s with a label >= p
                Mask rest = full & ~s;
                for (Mask add = rest;; add = (add - 1) & rest) {
                    Mask t = s | add;
                    for (int q : L) {
                        if (!P.leq(p, q) || (t == s && q == p)) continue;
                        cm.push_back(t);
                        cp.push_back(q);
                        rec();
                        cm.pop_back();
                        cp.pop_back();
                    }
                    if (add == 0) break;
                }
            };
            for (int p0 : L) {
                cm = {s0};
                cp = {p0};
                rec();
            }
        }
    }
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
        if (a.x != b.x) return a.x < b.x;
        if (a.chain != b.chain) return a.chain < b.chain;
        return a.p < b.p;
    });
    for (size_t i = 0; i < cells.size(); ++i) r.by_pchain.emplace(std::make_tuple(cells[i].x, cells[i].chain, cells[i].p), int(i));
    r.S = SSet(X.poset_ptr());
    std::vector<Mask> pushed;
    for (const auto& ci : cells) {
        const int k = static_cast<int>(ci.chain.size()) - 1;
        std::vector<Simplex> faces;
        for (int i = 0; i < k; ++i) {
            std::vector<Mask> c = ci.chain;
            std::vector<int> p = ci.p;
            c.erase(c.begin() + i);
            p.erase(p.begin() + i);
            faces.push_back(nd(r.lookup(ci.x, c, p), k - 1));
        }
        if (k > 0) {
            std::vector<Mask> head(ci.chain.begin(), ci.chain.end() - 1);
            int y = push_chain(X, nd(ci.x, X.dim(ci.x)), ci.chain[k - 1], head, pushed);
            std::vector<Mask> u;
            std::vector<int> up;
            Mono eta;
            for (int j = 0; j < k; ++j) {
                if (u.empty() || u.back() != pushed[j] || up.back() != ci.p[j]) {
                    u.push_back(pushed[j]);
                    up.push_back(ci.p[j]);
                }
                eta.push_back(static_cast<int>(u.size()) - 1);
            }
            faces.push_back(Simplex{eta, r.lookup(y, u, up)});
        }
        std::string id = X.id(ci.x) + "|";
        for (size_t j = 0; j < ci.chain.size(); ++j)
            id += (j ? "," : "") + mask_string(ci.chain[j]) + ":" + P.name(ci.p[j]);
        r.S.add_cell(id, k, std::move(faces), k == 0 ? ci.p[0] : -1);
    }
    r.S.finalize();
    r.info = std::move(cells);
    return r;
}

SMap lv_p(const SSet& X, const Subdivision& s) {
    SMap f;
    for (const auto& ci : s.info) {
        const auto& verts = X.vertices(ci.x);
        Mono theta;
        for (size_t i = 0; i < ci.chain.size(); ++i) {
            int best = -1;
            for (int b : bits_of(ci.chain[i]))
                if (X.label(verts[b]) == ci.p[i]) best = b;
            theta.push_back(best);
        }
        f.img.push_back(X.apply(nd(ci.x, X.dim(ci.x)), theta));
    }
    return f;
}

SMap lv_iterated(const SSet& X, const std::vector<Subdivision>& levels) {
    if (levels.empty()) return identity_map(X);
    SMap f;
    for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i) {
        const SSet& base = i == 0 ? X : levels[i - 1].S;
        SMap step = lv(base, levels[i]);
        f = (i == static_cast<int>(levels.size()) - 1) ? step : compose(f, step);
    }
    return f;
}

// ---- ordered complexes ----

std::map<std::vector<int>, int> simplex_index(const SSet& K) {
    std::map<std::vector<int>, int> idx;
    for (int c = 0; c < K.size(); ++c) {
        std::vector<int> v = K.vertices(c);
        std::sort(v.begin(), v.end());
        idx.emplace(std::move(v), c);
    }
    return idx;
}

SMap map_from_vertices(const SSet& X, const SSet& K, const std::vector<int>& vertex_image) {
    auto idx = simplex_index(K);
    SMap f;
    for (int c = 0; c < X.size(); ++c) {
        std::vector<int> u;
        Mono eta;
        for (int v : X.vertices(c)) {
            int w = vertex_image[v];
            if (K.label(w) != X.label(v))
                throw Error(ErrorKind::map, "vertex map does not preserve the label of '" + X.id(v) + "'");
            if (u.empty() || u.back() != w) u.push_back(w);
            eta.push_back(static_cast<int>(u.size()) - 1);
        }
        std::vector<int> key = u;
        std::sort(key.begin(), key.end());
        auto it = idx.find(key);
        if (it == idx.end() || K.vertices(it->second) != u)
            throw Error(ErrorKind::map, "image of '" + X.id(c) + "' is not an ordered simplex");
        f.img.push_back(Simplex{eta, it->second});
    }
    return f;
}

static bool fos_shape(const SSet& K) {
    std::set<std::vector<int>> seen;
    for (int c = 0; c < K.size(); ++c) {
        std::vector<int> v = K.vertices(c);
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

RelSubdivision sd_rel(const SSet& K, const std::vector<char>& A) {
    if (!fos_shape(K)) throw Error(ErrorKind::precondition, "relative subdivision needs an FOS complex");
    for (int c = 0; c < K.size(); ++c)
        if (A[c])
            for (const auto& f : K.cell(c).faces)
                if (!A[f.cell]) throw Error(ErrorKind::closure, "subcomplex misses a face of '" + K.id(c) + "'");
    std::vector<char> inA(K.size(), 0);  // vertex membership
    for (int c = 0; c < K.size(); ++c)
        if (K.dim(c) == 0 && A[c]) inA[c] = 1;
    for (int c = 0; c < K.size(); ++c) {
        const auto& vs = K.vertices(c);
        bool all = std::all_of(vs.begin(), vs.end(), [&](int v) { return inA[v]; });
        if (all && !A[c]) throw Error(ErrorKind::fullness, "subcomplex is not full at '" + K.id(c) + "'");
        bool seen_out = false;
        for (int v : vs) {
            if (!inA[v]) seen_out = true;
            else if (seen_out)
                throw Error(ErrorKind::order, "vertex of the subcomplex follows an outside vertex in '" + K.id(c) + "'");
        }
    }
    RelSubdivision r;
    r.sdK = sd(K);
    auto idx = simplex_index(K);

    // vertices: A vertices, then barycenters of the cells of K - A
    std::vector<std::string> vid;
    std::vector<int> vlab;
    std::vector<int> vert_of_A(K.size(), -1), vert_of_cell(K.size(), -1);
    for (int c = 0; c < K.size(); ++c)
        if (K.dim(c) == 0 && inA[c]) {
            vert_of_A[c] = static_cast<int>(vid.size());
            vid.push_back(K.id(c));
            vlab.push_back(K.label(c));
            r.carrier.push_back({c});
        }
    for (int c = 0; c < K.size(); ++c) {
        const auto& vs = K.vertices(c);
        if (std::any_of(vs.begin(), vs.end(), [&](int v) { return inA[v]; })) continue;
        vert_of_cell[c] = static_cast<int>(vid.size());
        vid.push_back(r.sdK.S.id(r.sdK.lookup(c, {full_mask(K.dim(c))})));
        vlab.push_back(K.max_label(c));
        r.carrier.push_back(vs);
    }
    std::vector<std::vector<int>> tuples;
    for (int c = 0; c < K.size(); ++c) {
        std::vector<int> apart, rest;
        for (int v : K.vertices(c)) (inA[v] ? apart : rest).push_back(v);
        std::vector<int> head;
        for (int v : apart) head.push_back(vert_of_A[v]);
        if (rest.empty()) {
            tuples.push_back(head);
            continue;
        }
        // maximal chains of nonempty subsets of rest ending at rest
        const int m = static_cast<int>(rest.size());
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        do {
            std::vector<int> t = head;
            std::vector<int> cur;
            for (int i = 0; i < m; ++i) {
                cur.push_back(rest[perm[i]]);
                std::vector<int> key = cur;
                std::sort(key.begin(), key.end());
                t.push_back(vert_of_cell[idx.at(key)]);
            }
            tuples.push_back(std::move(t));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    r.S = complex_from_simplices(K.poset(), vid, vlab, tuples, "/");

    std::vector<int> img0(r.sdK.S.size(), -1);
    for (int c = 0; c < K.size(); ++c) {
        int bary = r.sdK.lookup(c, {full_mask(K.dim(c))});
        const auto& vs = K.vertices(c);
        std::vector<int> rest;
        for (int v : vs)
            if (!inA[v]) rest.push_back(v);
        if (rest.empty()) {
            img0[bary] = vert_of_A[vs.back()];
        } else {
            std::sort(rest.begin(), rest.end());
            img0[bary] = vert_of_cell[idx.at(rest)];
        }
    }
    r.l0 = map_from_vertices(r.sdK.S, r.S, img0);
    std::vector<int> img1(r.S.size(), -1);
    for (int c = 0; c < K.size(); ++c) {
        if (vert_of_A[c] >= 0) img1[vert_of_A[c]] = c;
        if (vert_of_cell[c] >= 0) img1[vert_of_cell[c]] = K.vertices(c).back();
    }
    r.l1 = map_from_vertices(r.S, K, img1);
    return r;
}

FamilySubdivision sd_family(const SSet& K, const std::vector<std::vector<char>>& family) {
    FamilySubdivision out;
    if (family.empty()) {
        out.S = K;
        out.l0 = identity_map(K);
        out.l1 = identity_map(K);
        for (int c = 0; c < K.size(); ++c)
            if (K.dim(c) == 0) out.carrier.push_back({c});
        return out;
    }
    RelSubdivision r;
    try {
        r = sd_rel(K, family[0]);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("stage 1: ") + e.what());
    }
    out.levels.push_back(r.sdK);
    SSet cur = r.S;
    SMap l0 = r.l0, l1 = r.l1;
    std::vector<std::vector<int>> carrier = r.carrier;
    for (size_t j = 1; j < family.size(); ++j) {
        const auto& Aj = family[j];
        std::vector<char> vin(K.size(), 0);
        for (int c = 0; c < K.size(); ++c)
            if (K.dim(c) == 0 && Aj[c]) vin[c] = 1;
        std::vector<char> mask(cur.size(), 0);
        for (int c = 0; c < cur.size(); ++c) {
            bool ok = true;
            for (int v : cur.vertices(c))
                for (int kv : carrier[v]) ok = ok && vin[kv];
            mask[c] = ok;
        }
        RelSubdivision rj;
        try {
            rj = sd_rel(cur, mask);
        } catch (const Error& e) {
            throw Error(e.kind(), "stage " + std::to_string(j + 1) + ": " + e.what());
        }
        Subdivision next = sd(out.levels.back().S);
        SMap sdl0 = sd_map(out.levels.back().S, next, cur, rj.sdK, l0);
        l0 = compose(sdl0, rj.l0);
        l1 = compose(rj.l1, l1);
        std::vector<std::vector<int>> nc;
        for (int v = 0; v < rj.S.size(); ++v) {
            if (rj.S.dim(v) != 0) continue;
            std::set<int> u;
            for (int w : rj.carrier[v])
                for (int kv : carrier[w]) u.insert(kv);
            nc.emplace_back(u.begin(), u.end());
        }
        // rj.carrier is indexed by vertex order of rj.S, which equals cell order for vertices
        carrier = std::move(nc);
        out.levels.push_back(std::move(next));
        cur = std::move(rj.S);
    }
    out.S = std::move(cur);
    out.l0 = std::move(l0);
    out.l1 = std::move(l1);
    out.carrier = std::move(carrier);
    return out;
}

}  // namespace strathom

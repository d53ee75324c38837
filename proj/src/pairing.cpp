#include "strathom/pairing.hpp"

#include "strathom/moves.hpp"
#include "strathom/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

namespace strathom {

int Pairing::count() const {
    return static_cast<int>(std::count_if(T.begin(), T.end(), [](int t) { return t >= 0; }));
}

static std::string sid(const SSet& B, int c) { return "'" + B.id(c) + "'"; }

std::vector<Diagnostic> check_proper(const SSet& B, const Pairing& p) {
    std::vector<Diagnostic> out;
    if (p.size() != B.size()) {
        out.push_back({"shape", {}, "pairing does not match the cell count of the target"});
        return out;
    }
    for (int c = 0; c < B.size(); ++c)
        if (p.base[c])
            for (const auto& f : B.cell(c).faces)
                if (!p.base[f.cell]) out.push_back({"base", {B.id(c)}, "base is not face closed at " + sid(B, c)});
    std::vector<int> hits(B.size(), 0);
    for (int s = 0; s < B.size(); ++s) {
        if (!p.type2(s)) continue;
        const int t = p.T[s];
        if (p.base[s] || t >= B.size() || p.base[t]) {
            out.push_back({"partition", {B.id(s)}, "typeII cell " + sid(B, s) + " or its partner lies in the base"});
            continue;
        }
        ++hits[t];
        if (p.type2(t)) out.push_back({"partition", {B.id(t)}, "cell " + sid(B, t) + " is both typeI and typeII"});
        if (B.dim(t) != B.dim(s) + 1) {
            out.push_back({"dimension", {B.id(s), B.id(t)}, "T(" + B.id(s) + ") has the wrong dimension"});
            continue;
        }
        const int k = p.k[s];
        if (k < 0 || k > B.dim(t) || B.face(t, k) != nd(s, B.dim(s))) {
            out.push_back({"face", {B.id(s), B.id(t)}, "d" + std::to_string(k) + " of " + sid(B, t) + " is not " + sid(B, s)});
            continue;
        }
        for (int i = 0; i <= B.dim(t); ++i)
            if (i != k && B.face(t, i).cell == s)
                out.push_back({"uniqueness", {B.id(s), B.id(t)}, sid(B, s) + " occurs as more than one face of " + sid(B, t)});
        if (!is_admissible(B.flag(t), k))
            out.push_back({"admissibility", {B.id(s), B.id(t)}, "horn at " + std::to_string(k) + " of " + sid(B, t) + " is not admissible"});
    }
    for (int c = 0; c < B.size(); ++c) {
        if (p.base[c] || p.type2(c)) continue;
        if (hits[c] != 1)
            out.push_back({"partition", {B.id(c)}, "typeI cell " + sid(B, c) + " is the partner of " + std::to_string(hits[c]) + " cells"});
    }
    return out;
}

// sigma < tau: sigma typeII in the closure of T(tau), sigma != tau
static std::vector<std::vector<int>> ancestors(const SSet& B, const Pairing& p) {
    std::vector<std::vector<int>> pred(B.size());
    for (int t = 0; t < B.size(); ++t) {
        if (!p.type2(t)) continue;
        for (int s : B.closure(p.T[t]))
            if (s != t && p.type2(s)) pred[t].push_back(s);
    }
    return pred;
}

Regularity check_regular(const SSet& B, const Pairing& p) {
    auto diags = check_proper(B, p);
    if (!diags.empty()) throw Error(ErrorKind::precondition, "pairing is not proper: " + diags.front().message);
    auto pred = ancestors(B, p);
    Regularity r;
    r.phi.assign(B.size(), -1);
    // per dimension: Kahn on same-dimension edges, phi = longest chain below
    std::vector<int> indeg(B.size(), 0);
    std::vector<std::vector<int>> succ(B.size());
    for (int t = 0; t < B.size(); ++t)
        for (int s : pred[t])
            if (B.dim(s) == B.dim(t)) {
                succ[s].push_back(t);
                ++indeg[t];
            }
    std::queue<int> q;
    int seen = 0, total = 0;
    for (int c = 0; c < B.size(); ++c)
        if (p.type2(c)) {
            ++total;
            if (indeg[c] == 0) {
                q.push(c);
                r.phi[c] = 0;
            }
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        ++seen;
        for (int t : succ[s]) {
            r.phi[t] = std::max(r.phi[t], r.phi[s] + 1);
            if (--indeg[t] == 0) q.push(t);
        }
    }
    r.regular = seen == total;
    if (!r.regular) {
        // walk backwards along unresolved predecessors until a cell repeats
        int start = -1;
        for (int c = 0; c < B.size(); ++c)
            if (p.type2(c) && indeg[c] > 0) start = c;
        std::vector<int> pos(B.size(), -1), path;
        int cur = start;
        while (pos[cur] < 0) {
            pos[cur] = static_cast<int>(path.size());
            path.push_back(cur);
            for (int s : pred[cur])
                if (B.dim(s) == B.dim(cur) && indeg[s] > 0) {
                    cur = s;
                    break;
                }
        }
        r.cycle.assign(path.begin() + pos[cur], path.end());
        std::reverse(r.cycle.begin(), r.cycle.end());
        std::fill(r.phi.begin(), r.phi.end(), -1);
    }
    return r;
}

Presentation pairing_to_presentation(const SSet& B, const Pairing& p) {
    Regularity reg = check_regular(B, p);
    if (!reg.regular) throw Error(ErrorKind::precondition, "pairing is not regular");
    auto pred = ancestors(B, p);
    std::vector<int> indeg(B.size(), 0), F(B.size(), 0);
    std::vector<std::vector<int>> succ(B.size());
    for (int t = 0; t < B.size(); ++t)
        for (int s : pred[t]) {
            succ[s].push_back(t);
            ++indeg[t];
        }
    std::queue<int> q;
    std::vector<int> order;
    for (int c = 0; c < B.size(); ++c)
        if (p.type2(c)) {
            F[c] = 1;
            if (indeg[c] == 0) q.push(c);
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        order.push_back(s);
        for (int t : succ[s]) {
            F[t] = std::max(F[t], F[s] + 1);
            if (--indeg[t] == 0) q.push(t);
        }
    }
    if (static_cast<int>(order.size()) != p.count())
        throw Error(ErrorKind::precondition, "ancestral relation has a cycle across dimensions");
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (F[a] != F[b]) return F[a] < F[b];
        if (B.dim(a) != B.dim(b)) return B.dim(a) < B.dim(b);
        return B.id(a) < B.id(b);
    });
    Presentation a;
    a.base = p.base;
    for (int s : order) a.steps.emplace_back(p.T[s], p.k[s]);
    return a;
}

std::vector<Diagnostic> replay(const SSet& B, const Presentation& a, std::vector<char>* strict_steps) {
    std::vector<Diagnostic> out;
    if (static_cast<int>(a.base.size()) != B.size()) {
        out.push_back({"shape", {}, "base mask does not match the target"});
        return out;
    }
    std::vector<char> have = a.base;
    for (int c = 0; c < B.size(); ++c)
        if (have[c])
            for (const auto& f : B.cell(c).faces)
                if (!have[f.cell]) {
                    out.push_back({"base", {B.id(c)}, "base is not face closed at '" + B.id(c) + "'"});
                    return out;
                }
    if (strict_steps) strict_steps->clear();
    for (size_t i = 0; i < a.steps.size(); ++i) {
        auto [top, k] = a.steps[i];
        auto fail = [&](const std::string& why) {
            out.push_back({"step", {top >= 0 && top < B.size() ? B.id(top) : std::string()},
                           "step " + std::to_string(i) + ": " + why});
        };
        if (top < 0 || top >= B.size()) {
            fail("unknown top cell");
            return out;
        }
        if (B.dim(top) == 0 || k < 0 || k > B.dim(top)) {
            fail("bad face index");
            return out;
        }
        if (have[top]) {
            fail("top cell '" + B.id(top) + "' already present");
            return out;
        }
        Simplex tau = B.face(top, k);
        if (!tau.nondegenerate()) {
            fail("free face is degenerate");
            return out;
        }
        if (have[tau.cell]) {
            fail("free face '" + B.id(tau.cell) + "' already present");
            return out;
        }
        for (int j = 0; j <= B.dim(top); ++j) {
            if (j == k) continue;
            int c = B.face(top, j).cell;
            if (c == tau.cell) {
                fail("free face index is not unique");
                return out;
            }
            if (!have[c]) {
                fail("horn face d" + std::to_string(j) + " = '" + B.id(c) + "' missing");
                return out;
            }
        }
        for (const auto& f : B.cell(tau.cell).faces)
            if (!have[f.cell]) {
                fail("face of the free face missing");
                return out;
            }
        const DFlag J = B.flag(top);
        if (!is_admissible(J, k)) {
            fail("horn is not admissible");
            return out;
        }
        if (strict_steps) strict_steps->push_back(is_strictly_admissible(B.poset(), J, k));
        have[top] = have[tau.cell] = 1;
    }
    for (int c = 0; c < B.size(); ++c)
        if (!have[c]) {
            out.push_back({"incomplete", {B.id(c)}, "replay does not reach '" + B.id(c) + "'"});
            break;
        }
    return out;
}

Pairing presentation_to_pairing(const SSet& B, const Presentation& a) {
    auto d = replay(B, a);
    if (!d.empty()) throw Error(ErrorKind::step, d.front().message);
    Pairing p(B.size());
    p.base = a.base;
    for (auto [top, k] : a.steps) p.pair(B.face(top, k).cell, top, k);
    return p;
}

Restriction restrict_finite(const SSet& B, const Pairing& p, const std::vector<char>& C) {
    std::vector<int> inv(B.size(), -1);
    for (int s = 0; s < B.size(); ++s)
        if (p.type2(s)) inv[p.T[s]] = s;
    Restriction r;
    r.mid = p.base;
    std::vector<int> stack;
    for (int c = 0; c < B.size(); ++c)
        if (C[c] && !r.mid[c]) {
            r.mid[c] = 1;
            stack.push_back(c);
        }
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        auto add = [&](int d) {
            if (d >= 0 && !r.mid[d]) {
                r.mid[d] = 1;
                stack.push_back(d);
            }
        };
        for (const auto& f : B.cell(c).faces) add(f.cell);
        if (p.type2(c)) add(p.T[c]);
        add(inv[c]);
    }
    std::vector<int> idx;
    r.Bmid = subset(B, r.mid, &idx);
    r.first = Pairing(r.Bmid.size());
    for (int c = 0; c < B.size(); ++c) {
        if (!r.mid[c]) continue;
        r.first.base[idx[c]] = p.base[c];
        if (p.type2(c)) r.first.pair(idx[c], idx[p.T[c]], p.k[c]);
    }
    r.second = Pairing(B.size());
    r.second.base = r.mid;
    for (int c = 0; c < B.size(); ++c)
        if (!r.mid[c] && p.type2(c)) r.second.pair(c, p.T[c], p.k[c]);
    return r;
}

bool certificate_ok(const SSet& B, const Pairing& p, std::string* why) {
    auto d = check_proper(B, p);
    if (!d.empty()) {
        if (why) *why = d.front().message;
        return false;
    }
    auto reg = check_regular(B, p);
    if (!reg.regular) {
        if (why) *why = "ancestral relation has a cycle";
        return false;
    }
    auto pres = pairing_to_presentation(B, p);
    d = replay(B, pres);
    if (!d.empty()) {
        if (why) *why = d.front().message;
        return false;
    }
    return true;
}

// ---- canonical pairings ----

bool grid_rule(const std::vector<std::pair<int, int>>& walk, int k, bool first_case,
               std::vector<std::pair<int, int>>& partner, int& index) {
    const int n = static_cast<int>(walk.size());
    int lo = 0;
    while (lo < n && walk[lo].first < k) ++lo;
    int hi = lo;
    while (hi < n && walk[hi].first == k) ++hi;
    partner = walk;
    if (first_case) {
        if (hi > lo && hi < n && walk[hi] == std::make_pair(k + 1, walk[hi - 1].second)) {
            index = hi - 1;
            partner.erase(partner.begin() + index);
            return false;
        }
        if (hi >= n) throw Error(ErrorKind::precondition, "grid walk has no column after the horn column");
        index = hi;
        partner.insert(partner.begin() + index, {k, walk[hi].second});
        return true;
    }
    if (hi > lo && lo > 0 && walk[lo - 1] == std::make_pair(k - 1, walk[lo].second)) {
        index = lo;
        partner.erase(partner.begin() + index);
        return false;
    }
    if (lo == 0) throw Error(ErrorKind::precondition, "grid walk has no column before the horn column");
    index = lo;
    partner.insert(partner.begin() + index, {k, walk[lo - 1].second});
    return true;
}

static Certified finish(SSet B, Pairing p) {
    Certified c;
    c.A = subset(B, p.base);
    c.incl = inclusion_map(B, p.base);
    c.B = std::move(B);
    c.pairing = std::move(p);
    return c;
}

static std::vector<int> sorted_verts(const SSet& X, int c) {
    std::vector<int> v = X.vertices(c);
    std::sort(v.begin(), v.end());
    return v;
}

Certified degeneracy_section(const Poset& P, const DFlag& Jp, int k) {
    const int n = static_cast<int>(Jp.size()) - 1;
    if (!is_dflag(P, Jp)) throw Error(ErrorKind::parameter, "not a d-flag");
    int j;
    if (k >= 0 && k < n && Jp[k] == Jp[k + 1]) j = k + 1;
    else if (k > 0 && k <= n && Jp[k] == Jp[k - 1]) j = k - 1;
    else throw Error(ErrorKind::parameter, "vertex " + std::to_string(k) + " has no repeated neighbour");
    SSet B = simplex_set(P, Jp);
    auto idx = simplex_index(B);
    Pairing p(B.size());
    for (int c = 0; c < B.size(); ++c) {
        auto v = sorted_verts(B, c);
        bool hk = std::find(v.begin(), v.end(), k) != v.end();
        bool hj = std::find(v.begin(), v.end(), j) != v.end();
        if (!hk) {
            p.base[c] = 1;
            continue;
        }
        if (hj) continue;
        auto w = v;
        w.insert(std::upper_bound(w.begin(), w.end(), j), j);
        int pos = static_cast<int>(std::find(w.begin(), w.end(), j) - w.begin());
        p.pair(c, idx.at(w), pos);
    }
    return finish(std::move(B), std::move(p));
}

static Mask to_local(const std::vector<int>& verts, Mask global) {
    Mask m = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        if (global >> verts[i] & 1) m |= Mask(1) << i;
    return m;
}

static Mask to_global(const std::vector<int>& verts, Mask local) {
    Mask m = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        if (local >> i & 1) m |= Mask(1) << verts[i];
    return m;
}

static std::vector<int> mask_vertices(Mask m) {
    std::vector<int> v;
    for (int b = 0; m; ++b, m >>= 1)
        if (m & 1) v.push_back(b);
    return v;
}

Certified sd_section(const Poset& P, const DFlag& J) {
    if (!is_dflag(P, J)) throw Error(ErrorKind::parameter, "not a d-flag");
    const int q = static_cast<int>(J.size()) - 1;
    SSet X = simplex_set(P, J);
    auto xidx = simplex_index(X);
    Subdivision s = sd(X);
    const SSet& B = s.S;
    Pairing p(B.size());
    auto initial = [](Mask g) { return (g & (g + 1)) == 0; };
    auto in_D = [&](const std::vector<Mask>& G, int pp) {
        for (Mask g : G) {
            int top = 63 - std::countl_zero(g);
            int lim = std::min(top, pp);
            Mask need = lim < 0 ? 0 : (Mask(1) << (lim + 1)) - 1;
            if ((g & need) != need) return false;
        }
        return true;
    };
    auto cell_of = [&](const std::vector<Mask>& G) {
        int x = xidx.at(mask_vertices(G.back()));
        std::vector<Mask> local;
        for (Mask g : G) local.push_back(to_local(X.vertices(x), g));
        return s.lookup(x, local);
    };
    for (int c = 0; c < B.size(); ++c) {
        const auto& ci = s.info[c];
        std::vector<Mask> G;
        for (Mask m : ci.chain) G.push_back(to_global(X.vertices(ci.x), m));
        if (std::all_of(G.begin(), G.end(), initial)) {
            p.base[c] = 1;
            continue;
        }
        int pp = q;
        while (!in_D(G, pp - 1)) --pp;  // cell lies in D^{pp-1} \ D^pp
        const int k = static_cast<int>(G.size()) - 1;
        int m = k;
        while (G[m] >> pp & 1) --m;
        if (m < k && G[m + 1] == (G[m] | (Mask(1) << pp))) continue;  // typeI
        std::vector<Mask> H = G;
        H.insert(H.begin() + m + 1, G[m] | (Mask(1) << pp));
        p.pair(c, cell_of(H), m + 1);
    }
    return finish(B, std::move(p));
}

Certified sdp_section(const Poset& P, const DFlag& J) {
    if (!is_dflag(P, J)) throw Error(ErrorKind::parameter, "not a d-flag");
    for (size_t i = 1; i < J.size(); ++i)
        if (J[i] == J[i - 1]) throw Error(ErrorKind::parameter, "sd_P section needs a nondegenerate flag");
    const int n = static_cast<int>(J.size()) - 1;
    const Mask full = (Mask(1) << (n + 1)) - 1;
    SSet X = simplex_set(P, J);
    auto xidx = simplex_index(X);
    Subdivision s = sd_p(X);
    const SSet& B = s.S;
    Pairing p(B.size());
    for (int c = 0; c < B.size(); ++c) {
        const auto& ci = s.info[c];
        std::vector<Mask> G;
        for (Mask m : ci.chain) G.push_back(to_global(X.vertices(ci.x), m));
        if (G.front() == full) {
            p.base[c] = 1;
            continue;
        }
        const int len = static_cast<int>(G.size());
        int m = len - 1;
        while (G[m] == full) --m;
        if (m < len - 1 && ci.p[m] == ci.p[m + 1]) continue;  // typeI
        std::vector<Mask> H = G;
        std::vector<int> pp = ci.p;
        H.insert(H.begin() + m + 1, full);
        pp.insert(pp.begin() + m + 1, ci.p[m]);
        int x = xidx.at(mask_vertices(H.back()));
        std::vector<Mask> local;
        for (Mask g : H) local.push_back(to_local(X.vertices(x), g));
        p.pair(c, s.lookup(x, local, pp), m + 1);
    }
    return finish(B, std::move(p));
}

bool pushout_product_ambiguous(const DFlag& J, int k) {
    const int m = static_cast<int>(J.size()) - 1;
    return k > 0 && k < m && J[k - 1] == J[k] && J[k] == J[k + 1];
}

Certified pushout_product(const Poset& P, const DFlag& J, int k, int n) {
    if (!is_dflag(P, J)) throw Error(ErrorKind::parameter, "not a d-flag");
    if (!is_admissible(J, k)) throw Error(ErrorKind::parameter, "horn is not admissible");
    if (n < 0) throw Error(ErrorKind::parameter, "negative simplex dimension");
    const int m = static_cast<int>(J.size()) - 1;
    const bool first_case = k < m && J[k] == J[k + 1];
    SSet X = simplex_set(P, J);
    SSet S = unfiltered_simplex(n);
    auto xidx = simplex_index(X);
    Product prod = outer_product(X, S);
    const int stop = S.size() - 1;
    Pairing p(prod.P.size());
    for (int c = 0; c < prod.P.size(); ++c) {
        const auto& pc = prod.info[c];
        auto xv = X.vertices(pc.x);
        bool rel = pc.s == stop;
        for (int a = 0; a <= m && rel; ++a)
            if (a != k && std::find(xv.begin(), xv.end(), a) == xv.end()) rel = false;
        if (!rel) {
            p.base[c] = 1;
            continue;
        }
        std::vector<std::pair<int, int>> walk;
        for (auto [a, b] : pc.walk) walk.emplace_back(xv[a], S.vertices(pc.s)[b]);
        std::vector<std::pair<int, int>> partner;
        int index;
        if (!grid_rule(walk, k, first_case, partner, index)) continue;
        std::vector<int> hv;
        for (auto [a, b] : partner)
            if (hv.empty() || hv.back() != a) hv.push_back(a);
        int x2 = xidx.at(hv);
        std::vector<std::pair<int, int>> local;
        for (auto [a, b] : partner)
            local.emplace_back(static_cast<int>(std::find(hv.begin(), hv.end(), a) - hv.begin()), b);
        p.pair(c, prod.lookup(x2, pc.s, local), index);
    }
    return finish(std::move(prod.P), std::move(p));
}

}  // namespace strathom

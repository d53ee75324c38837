#include "strathom/fos.hpp"

#include "strathom/cylinders.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace strathom {

bool is_nonsingular(const SSet& X) {
    for (int c = 0; c < X.size(); ++c) {
        std::vector<int> v = X.vertices(c);
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
    }
    return true;
}

bool is_fos(const SSet& X) {
    if (!is_nonsingular(X)) return false;
    std::set<std::vector<int>> seen;
    for (int c = 0; c < X.size(); ++c) {
        std::vector<int> v = X.vertices(c);
        std::sort(v.begin(), v.end());
        if (!seen.insert(std::move(v)).second) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> sorted_vertex_sets(const SSet& K) {
    std::vector<std::vector<int>> out;
    for (int c = 0; c < K.size(); ++c) {
        auto v = K.vertices(c);
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    return out;
}

// all strictly increasing chains of cells under vertex-set inclusion
std::vector<std::vector<int>> chains(const SSet& K) {
    auto vs = sorted_vertex_sets(K);
    std::vector<std::vector<int>> up(K.size());
    for (int a = 0; a < K.size(); ++a)
        for (int b = 0; b < K.size(); ++b)
            if (vs[a].size() < vs[b].size() && std::includes(vs[b].begin(), vs[b].end(), vs[a].begin(), vs[a].end()))
                up[a].push_back(b);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int c) {
        cur.push_back(c);
        out.push_back(cur);
        for (int d : up[c]) rec(d);
        cur.pop_back();
    };
    for (int c = 0; c < K.size(); ++c) rec(c);
    return out;
}

Mask full(int n) { return (Mask(1) << (n + 1)) - 1; }

}  // namespace

Mcx mcx(const SSet& K, const SSet& Kp, const SMap& f) {
    if (!is_fos(K) || !is_fos(Kp)) throw Error(ErrorKind::precondition, "join cylinder needs FOS complexes");
    auto diags = check_map(K, Kp, f);
    if (!diags.empty()) throw Error(ErrorKind::map, diags.front().message);
    Mcx r;
    r.sdK = sd(K);
    r.sdKp = sd(Kp);
    const int nt = Kp.size();
    auto vsp = sorted_vertex_sets(Kp);
    std::vector<int> fc(K.size());
    for (int t = 0; t < K.size(); ++t) fc[t] = f.img[t].cell;

    std::vector<std::string> ids;
    std::vector<int> labels;
    std::set<std::string> taken;
    for (int c = 0; c < nt; ++c) {
        ids.push_back(r.sdKp.S.id(r.sdKp.lookup(c, {full(Kp.dim(c))})));
        labels.push_back(Kp.max_label(c));
        taken.insert(ids.back());
    }
    for (int t = 0; t < K.size(); ++t) {
        std::string id = r.sdK.S.id(r.sdK.lookup(t, {full(K.dim(t))}));
        while (taken.count(id)) id += "~s";
        ids.push_back(id);
        labels.push_back(K.max_label(t));
    }

    auto sig = chains(Kp), tau = chains(K);
    std::vector<std::vector<int>> simplices;
    for (const auto& s : sig) simplices.push_back(s);
    for (const auto& t : tau) {
        std::vector<int> tail;
        for (int x : t) tail.push_back(nt + x);
        simplices.push_back(tail);
        const auto& target = vsp[fc[t.front()]];
        for (const auto& s : sig) {
            const auto& last = vsp[s.back()];
            if (!std::includes(target.begin(), target.end(), last.begin(), last.end())) continue;
            std::vector<int> all = s;
            all.insert(all.end(), tail.begin(), tail.end());
            simplices.push_back(std::move(all));
        }
    }
    r.M = complex_from_simplices(Kp.poset(), ids, labels, simplices, "/");

    std::vector<int> to_M(r.sdKp.S.size(), -1), src_M(r.sdK.S.size(), -1), back(r.M.size(), -1);
    for (int c = 0; c < nt; ++c) {
        const int v = r.sdKp.lookup(c, {full(Kp.dim(c))});
        to_M[v] = c;
        back[c] = v;
    }
    for (int t = 0; t < K.size(); ++t) {
        src_M[r.sdK.lookup(t, {full(K.dim(t))})] = nt + t;
        back[nt + t] = back[fc[t]];
    }
    r.from_target = map_from_vertices(r.sdKp.S, r.M, to_M);
    r.from_source = map_from_vertices(r.sdK.S, r.M, src_M);
    r.retraction = map_from_vertices(r.M, r.sdKp.S, back);

    auto idx = simplex_index(r.M);
    r.pairing = Pairing(r.M.size());
    for (int c = 0; c < r.M.size(); ++c) {
        const auto& v = r.M.vertices(c);
        auto split = std::find_if(v.begin(), v.end(), [&](int x) { return x >= nt; });
        if (split == v.end()) {
            r.pairing.base[c] = 1;
            continue;
        }
        const int target = fc[*split - nt];
        if (split != v.begin() && *(split - 1) == target) continue;  // typeI
        std::vector<int> w(v.begin(), v.end());
        const int pos = static_cast<int>(split - v.begin());
        w.insert(w.begin() + pos, target);
        std::sort(w.begin(), w.end());
        r.pairing.pair(c, idx.at(w), pos);
    }
    return r;
}

FosResult to_fos(const SSet& X, int max_rounds) {
    FosResult r;
    r.cert.from = X;
    SSet cur = X;
    while (!is_fos(cur)) {
        if (r.subdivisions == max_rounds)
            throw Error(ErrorKind::precondition, "not FOS after " + std::to_string(max_rounds) + " subdivisions");
        Subdivision s = sd(cur);
        SMap l = lv(cur, s);
        Certified t = cylinder_fsae(CylFsae::tgt_into_cyl, {s.S, cur, l, {}, {}});
        Leg fwd;
        fwd.dir = Leg::Dir::forward;
        fwd.kind = Leg::Kind::presentation;
        fwd.pres = pairing_to_presentation(t.B, t.pairing);
        fwd.B = std::move(t.B);

        CylinderBundle b = mapping_cylinder(s.S, cur, l);
        std::vector<char> end(b.M.size(), 0);
        for (const auto& x : b.i_src.img) end[x.cell] = 1;
        CollapseRun run = collapse_greedy(b.M, end, false, true);
        if (run.keep != end) throw Error(ErrorKind::precondition, "last vertex cylinder does not collapse onto sd");
        Leg bwd;
        bwd.dir = Leg::Dir::backward;
        bwd.kind = Leg::Kind::presentation;
        bwd.pres.base = end;
        for (auto it = run.moves.rbegin(); it != run.moves.rend(); ++it) bwd.pres.steps.emplace_back(it->top, it->k);
        for (int c = 0; c < s.S.size(); ++c) bwd.incl.emplace(s.S.id(c), b.M.id(b.i_src.img[c].cell));
        bwd.B = std::move(b.M);

        r.cert.legs.push_back(std::move(fwd));
        r.cert.legs.push_back(std::move(bwd));
        cur = std::move(s.S);
        ++r.subdivisions;
    }
    r.K = cur;
    r.cert.to = std::move(cur);
    return r;
}

}  // namespace strathom

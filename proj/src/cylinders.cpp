#include "strathom/cylinders.hpp"

#include <algorithm>

namespace strathom {

using Walk = std::vector<std::pair<int, int>>;

static Walk diagonal(int n, int s) {
    Walk w;
    for (int i = 0; i <= n; ++i) w.emplace_back(i, s);
    return w;
}

// Cells 0 and 1 of unfiltered_simplex(1) are its vertices, cell 2 the edge.
static const SSet& interval() {
    static const SSet D1 = unfiltered_simplex(1);
    return D1;
}

static SMap end_inclusion(const SSet& X, const Product& prod, int end) {
    SMap m;
    for (int x = 0; x < X.size(); ++x) m.img.push_back(nd(prod.lookup(x, end, diagonal(X.dim(x), 0)), X.dim(x)));
    return m;
}

// nondegenerate images as cell indices, -1 elsewhere
static std::vector<int> cells_of(const SMap& m) {
    std::vector<int> out;
    for (const auto& s : m.img) out.push_back(s.nondegenerate() ? s.cell : -1);
    return out;
}

CylinderBundle mapping_cylinder(const SSet& X, const SSet& Y, const SMap& f) {
    auto diags = check_map(X, Y, f);
    if (!diags.empty()) throw Error(ErrorKind::map, diags.front().message);
    CylinderBundle b;
    b.prod = outer_product(X, interval());
    SMap i0 = end_inclusion(X, b.prod, 0);
    SMap i1 = end_inclusion(X, b.prod, 1);
    auto po = pushout(X, b.prod.P, i0, Y, f);
    b.M = std::move(po.D);
    b.i_tgt = std::move(po.from_C);
    b.from_prod = std::move(po.from_B);
    b.i_src = compose(i1, b.from_prod);
    b.prod_cell.assign(b.M.size(), -1);
    for (int c = 0; c < b.prod.P.size(); ++c)
        if (po.new_of_B[c] >= 0) b.prod_cell[po.new_of_B[c]] = c;
    for (int d = 0; d < b.M.size(); ++d) {
        if (b.prod_cell[d] < 0) {
            b.proj.img.push_back(nd(d, b.M.dim(d)));
            continue;
        }
        const auto& pc = b.prod.info[b.prod_cell[d]];
        Mono u;
        for (auto [a, s] : pc.walk) u.push_back(a);
        b.proj.img.push_back(apply_map(f, Simplex{u, pc.x}));
    }
    return b;
}

SMap product_projection(const Product& prod) {
    SMap pi;
    for (const auto& pc : prod.info) {
        Mono u;
        for (auto [a, s] : pc.walk) u.push_back(a);
        pi.img.push_back(Simplex{u, pc.x});
    }
    return pi;
}

Pairing transport(const Pairing& p, const std::vector<int>& cell_map, int target_size) {
    Pairing q(target_size);
    std::fill(q.base.begin(), q.base.end(), 1);
    for (int c = 0; c < p.size(); ++c) {
        if (p.base[c]) continue;
        if (cell_map[c] < 0) throw Error(ErrorKind::precondition, "relative cell has no nondegenerate image");
        q.base[cell_map[c]] = 0;
    }
    for (int c = 0; c < p.size(); ++c)
        if (p.type2(c)) q.pair(cell_map[c], cell_map[p.T[c]], p.k[c]);
    return q;
}

Pairing end_pairing(const Product& prod, int end) {
    const SSet& D1 = interval();
    Pairing p(prod.P.size());
    for (int c = 0; c < prod.P.size(); ++c) {
        const auto& pc = prod.info[c];
        if (pc.s == end) {
            p.base[c] = 1;
            continue;
        }
        Walk walk, partner;
        for (auto [a, b] : pc.walk) walk.emplace_back(D1.vertices(pc.s)[b], a);
        int index;
        if (!grid_rule(walk, end, end == 0, partner, index)) continue;
        const bool both = partner.front().first != partner.back().first;
        const int s2 = both ? 2 : partner.front().first;
        Walk local;
        for (auto [h, o] : partner) local.emplace_back(o, both ? h : 0);
        p.pair(c, prod.lookup(pc.x, s2, local), index);
    }
    return p;
}

Pairing product_rel_pairing(const SSet& B, const Pairing& p, const Product& prod) {
    std::vector<int> sigma_of(B.size(), -1);
    for (int c = 0; c < B.size(); ++c)
        if (p.type2(c)) sigma_of[p.T[c]] = c;
    Pairing q(prod.P.size());
    for (int c = 0; c < prod.P.size(); ++c) {
        const auto& pc = prod.info[c];
        if (pc.s != 2 || p.base[pc.x]) {
            q.base[c] = 1;
            continue;
        }
        const bool on_tau = !p.type2(pc.x);
        const int sigma = on_tau ? sigma_of[pc.x] : pc.x;
        const int tau = on_tau ? pc.x : p.T[pc.x];
        const int k = p.k[sigma];
        const int m = B.dim(tau);
        const DFlag J = B.flag(tau);
        const bool first_case = k < m && J[k] == J[k + 1];
        Walk walk, partner;
        for (auto [a, b] : pc.walk) walk.emplace_back(on_tau || a < k ? a : a + 1, b);
        int index;
        if (!grid_rule(walk, k, first_case, partner, index)) continue;
        const bool hits_k = std::any_of(partner.begin(), partner.end(), [&](auto& pt) { return pt.first == k; });
        Walk local;
        for (auto [h, o] : partner) local.emplace_back(hits_k || h < k ? h : h - 1, o);
        q.pair(c, prod.lookup(hits_k ? tau : sigma, 2, local), index);
    }
    return q;
}

std::optional<CylFsae> cyl_fsae_from_string(const std::string& s) {
    if (s == "i0") return CylFsae::i0;
    if (s == "i1") return CylFsae::i1;
    if (s == "tgt_into_cyl") return CylFsae::tgt_into_cyl;
    if (s == "rel_horn_quotient") return CylFsae::rel_horn_quotient;
    if (s == "subcyl") return CylFsae::subcyl;
    return std::nullopt;
}

static Pairing with_sub_base(Pairing p, const Product& prod, const std::vector<char>& sub) {
    for (int c = 0; c < prod.P.size(); ++c)
        if (sub[prod.info[c].x]) {
            p.base[c] = 1;
            p.T[c] = p.k[c] = -1;
        }
    return p;
}

static Certified on_cylinder(const CylinderBundle& b, const Pairing& over_prod) {
    std::vector<int> to_M(b.prod.P.size(), -1);
    for (int d = 0; d < b.M.size(); ++d)
        if (b.prod_cell[d] >= 0) to_M[b.prod_cell[d]] = d;
    Certified c;
    c.pairing = transport(over_prod, to_M, b.M.size());
    c.A = subset(b.M, c.pairing.base);
    c.incl = inclusion_map(b.M, c.pairing.base);
    c.B = b.M;
    return c;
}

Certified cylinder_fsae(CylFsae which, const CylinderData& d) {
    if (which == CylFsae::i0 || which == CylFsae::i1) {
        const int end = which == CylFsae::i0 ? 0 : 1;
        Product prod = outer_product(d.X, interval());
        Certified c;
        c.pairing = end_pairing(prod, end);
        c.incl = end_inclusion(d.X, prod, end);
        c.A = d.X;
        c.B = std::move(prod.P);
        return c;
    }
    if (d.f.img.size() != static_cast<size_t>(d.X.size()))
        throw Error(ErrorKind::parameter, "map does not match its source");
    CylinderBundle b = mapping_cylinder(d.X, d.Y, d.f);
    if (which == CylFsae::rel_horn_quotient) {
        if (d.pairing.size() != d.X.size() || !check_proper(d.X, d.pairing).empty())
            throw Error(ErrorKind::parameter, "source pairing is not a proper pairing on X");
        return on_cylinder(b, product_rel_pairing(d.X, d.pairing, b.prod));
    }
    std::vector<char> sub(d.X.size(), 0);
    if (which == CylFsae::subcyl) {
        if (d.sub.size() != static_cast<size_t>(d.X.size()) || face_closure(d.X, d.sub) != d.sub)
            throw Error(ErrorKind::parameter, "subcylinder needs a face-closed subset of X");
        sub = d.sub;
    }
    return on_cylinder(b, with_sub_base(end_pairing(b.prod, 0), b.prod, sub));
}

MHat mhat(const SSet& X, const SSet& Z, const SMap& H) {
    Product U = outer_product(X, interval());
    if (H.img.size() != static_cast<size_t>(U.P.size()))
        throw Error(ErrorKind::parameter, "homotopy does not match X (x) D1");
    MHat r;
    r.MH = mapping_cylinder(U.P, Z, H);
    auto po = pushout(U.P, r.MH.M, r.MH.i_src, X, product_projection(U));
    r.M = std::move(po.D);
    r.quotient = std::move(po.from_B);
    const auto to_hat = cells_of(compose(r.MH.from_prod, r.quotient));

    for (int end = 0; end < 2; ++end) {
        SMap fe = compose(end_inclusion(X, U, end), H);
        CylinderBundle& Me = end == 0 ? r.Mf : r.Mg;
        Me = mapping_cylinder(X, Z, fe);
        Certified& s = end == 0 ? r.sf : r.sg;
        for (int d = 0; d < Me.M.size(); ++d) {
            if (Me.prod_cell[d] < 0) {
                s.incl.img.push_back(apply_map(r.quotient, r.MH.i_tgt.img[d]));
                continue;
            }
            const auto& pc = Me.prod.info[Me.prod_cell[d]];
            const int c0 = U.lookup(pc.x, end, diagonal(X.dim(pc.x), 0));
            const int cH = r.MH.prod.lookup(c0, pc.s, pc.walk);
            s.incl.img.push_back(apply_map(r.quotient, r.MH.from_prod.img[cH]));
        }
        Pairing rel = product_rel_pairing(U.P, end_pairing(U, end), r.MH.prod);
        s.pairing = transport(rel, to_hat, r.M.size());
        s.A = Me.M;
        s.B = r.M;
    }
    return r;
}

HomotopySquare homotopy_square(const SSet& X, const SSet& Y, const SMap& f, const SMap& g, const SMap& H) {
    for (const SMap* m : {&f, &g}) {
        auto diags = check_map(X, Y, *m);
        if (!diags.empty()) throw Error(ErrorKind::map, diags.front().message);
        if (!is_injective(*m)) throw Error(ErrorKind::precondition, "homotopy square needs cofibrations");
    }
    Product U = outer_product(X, interval());
    if (H.img.size() != static_cast<size_t>(U.P.size()))
        throw Error(ErrorKind::parameter, "homotopy does not match X (x) D1");
    if (compose(end_inclusion(X, U, 0), H).img != f.img || compose(end_inclusion(X, U, 1), H).img != g.img)
        throw Error(ErrorKind::parameter, "homotopy does not restrict to f and g");

    HomotopySquare sq;
    sq.hat = mhat(X, Y, H);
    CylinderBundle cyl = mapping_cylinder(Y, Y, identity_map(Y));
    sq.Cyl = cyl.M;
    const auto cyl_cells = cells_of(cyl.from_prod);
    sq.arrows.push_back({"f", "X", "Y", f, std::nullopt});
    sq.arrows.push_back({"g", "X", "Y", g, std::nullopt});
    sq.arrows.push_back({"i1", "Y", "Cyl", cyl.i_src, transport(end_pairing(cyl.prod, 1), cyl_cells, cyl.M.size())});

    PushoutResult side[2];
    Pairing into_R[2];  // M^_H -> R_e
    for (int e = 0; e < 2; ++e) {
        const SMap& m = e == 0 ? f : g;
        const std::string tag = e == 0 ? "f" : "g";
        const CylinderBundle& Me = e == 0 ? sq.hat.Mf : sq.hat.Mg;
        const Certified& se = e == 0 ? sq.hat.sf : sq.hat.sg;
        SMap sprime;
        for (int d = 0; d < Me.M.size(); ++d) {
            if (Me.prod_cell[d] < 0) {
                sprime.img.push_back(nd(d, Me.M.dim(d)));
                continue;
            }
            const auto& pc = Me.prod.info[Me.prod_cell[d]];
            sprime.img.push_back(cyl.from_prod.img[cyl.prod.lookup(m.img[pc.x].cell, pc.s, pc.walk)]);
        }
        std::vector<char> sub(Y.size(), 0);
        for (const auto& s : m.img) sub[s.cell] = 1;
        Pairing sp = transport(with_sub_base(end_pairing(cyl.prod, 0), cyl.prod, sub), cyl_cells, cyl.M.size());
        sq.arrows.push_back({"X->M_" + tag, "X", "M_" + tag, Me.i_src, std::nullopt});
        sq.arrows.push_back({"s'_" + tag, "M_" + tag, "Cyl", sprime, sp});
        sq.arrows.push_back({"s_" + tag, "M_" + tag, "Mhat", se.incl, se.pairing});
        side[e] = pushout(Me.M, cyl.M, sprime, sq.hat.M, se.incl);
        const int n = side[e].D.size();
        into_R[e] = transport(sp, side[e].new_of_B, n);
        sq.arrows.push_back({"Mhat->R_" + tag, "Mhat", "R_" + tag, side[e].from_C, into_R[e]});
        sq.arrows.push_back({"Cyl->R_" + tag, "Cyl", "R_" + tag, side[e].from_B,
                             transport(se.pairing, cells_of(side[e].from_C), n)});
    }
    sq.Rf = side[0].D;
    sq.Rg = side[1].D;
    auto po = pushout(sq.hat.M, sq.Rg, side[1].from_C, sq.Rf, side[0].from_C);
    sq.R = po.D;
    sq.arrows.push_back({"R_f->R", "R_f", "R", po.from_C, transport(into_R[1], po.new_of_B, po.D.size())});
    sq.arrows.push_back({"R_g->R", "R_g", "R", po.from_B, transport(into_R[0], cells_of(po.from_C), po.D.size())});
    sq.via_f = compose(compose(cyl.i_src, side[0].from_B), po.from_C);
    sq.via_g = compose(compose(cyl.i_src, side[1].from_B), po.from_B);
    sq.commutes = compose(f, sq.via_f).img == compose(g, sq.via_g).img;
    return sq;
}

TorsionSum torsion_sum(const SSet& X, const SSet& Y, const SMap& a, const SSet& Z, const SMap& b) {
    for (auto [m, T] : {std::pair{&a, &Y}, std::pair{&b, &Z}}) {
        auto diags = check_map(X, *T, *m);
        if (!diags.empty()) throw Error(ErrorKind::map, diags.front().message);
        if (!is_injective(*m)) throw Error(ErrorKind::precondition, "sum needs cofibrations");
    }
    auto po = pushout(X, Y, a, Z, b);
    TorsionSum r;
    r.W = std::move(po.D);
    r.from_Y = std::move(po.from_B);
    r.from_Z = std::move(po.from_C);
    r.diagonal = compose(b, r.from_Z);
    return r;
}

bool base_matches(const SMap& incl, const Pairing& p) {
    std::vector<char> img(p.size(), 0);
    for (const auto& s : incl.img) {
        if (!s.nondegenerate() || s.cell < 0 || s.cell >= p.size()) return false;
        img[s.cell] = 1;
    }
    return img == p.base;
}

}  // namespace strathom

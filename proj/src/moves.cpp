#include "strathom/moves.hpp"

#include <algorithm>

namespace strathom {

bool is_admissible(const DFlag& J, int k) {
    const int n = static_cast<int>(J.size()) - 1;
    if (k < 0 || k > n) return false;
    return (k < n && J[k] == J[k + 1]) || (k > 0 && J[k] == J[k - 1]);
}

bool is_strictly_admissible(const Poset& P, const DFlag& J, int k) {
    if (!is_admissible(J, k)) return false;
    for (int p : J)
        if (P.less(J[k], p)) return false;
    return true;
}

std::string collapse_obstruction(const SSet& X, const std::vector<std::vector<int>>& cofaces, int top, int k,
                                 const std::vector<char>* protect, bool strict_only) {
    if (top < 0 || top >= X.size()) return "top cell does not exist";
    const int n = X.dim(top);
    if (n == 0) return "top cell is a vertex";
    if (k < 0 || k > n) return "face index out of range";
    if (!cofaces[top].empty()) return "top cell '" + X.id(top) + "' is not maximal";
    const Simplex tau = X.face(top, k);
    if (!tau.nondegenerate()) return "face d" + std::to_string(k) + " is degenerate";
    for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        const Simplex f = X.face(top, i);
        auto cl = X.closure(f.cell);
        if (std::find(cl.begin(), cl.end(), tau.cell) != cl.end())
            return "face '" + X.id(tau.cell) + "' is not realized by a unique index";
    }
    if (cofaces[tau.cell].size() != 1) return "face '" + X.id(tau.cell) + "' is not free";
    if (protect && ((*protect)[top] || (*protect)[tau.cell])) return "cell is protected";
    const DFlag J = X.flag(top);
    if (!is_admissible(J, k)) return "horn is not admissible";
    if (strict_only && !is_strictly_admissible(X.poset(), J, k)) return "horn is not strictly admissible";
    return {};
}

std::vector<FreePair> find_free_pairs(const SSet& X, const std::vector<char>& protect, bool strict_only) {
    auto co = X.cofaces();
    std::vector<FreePair> out;
    for (int c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0 || !co[c].empty()) continue;
        for (int k = 0; k <= X.dim(c); ++k)
            if (collapse_obstruction(X, co, c, k, protect.empty() ? nullptr : &protect, strict_only).empty())
                out.push_back({c, X.face(c, k).cell, k});
    }
    std::sort(out.begin(), out.end(), [&](const FreePair& a, const FreePair& b) {
        if (X.dim(a.top) != X.dim(b.top)) return X.dim(a.top) > X.dim(b.top);
        if (X.id(a.top) != X.id(b.top)) return X.id(a.top) < X.id(b.top);
        return a.k < b.k;
    });
    return out;
}

SSet horn(const Poset& P, const HornSpec& h) {
    SSet D = simplex_set(P, h.dflag);
    return subset(D, horn_mask(D, h.k));
}

std::pair<SSet, MoveRecord> collapse(const SSet& X, int top, int face, int k) {
    auto co = X.cofaces();
    std::string why = collapse_obstruction(X, co, top, k, nullptr, false);
    if (why.empty() && X.face(top, k).cell != face) why = "face does not match d" + std::to_string(k);
    if (!why.empty()) throw Error(ErrorKind::illegal_move, why);
    MoveRecord rec;
    rec.kind = MoveRecord::Kind::collapse;
    rec.top = X.id(top);
    rec.k = k;
    rec.strict = is_strictly_admissible(X.poset(), X.flag(top), k);
    std::vector<char> keep(X.size(), 1);
    keep[top] = keep[face] = 0;
    return {subset(X, keep), rec};
}

static std::string fresh_name(const SSet& X, int& counter) {
    std::string s;
    do s = "x" + std::to_string(counter++);
    while (X.find(s) >= 0);
    return s;
}

std::pair<SSet, MoveRecord> expand(const SSet& X, const HornSpec& h, const SMap& attach, const std::string& new_top,
                                   const std::string& new_face) {
    const int n = static_cast<int>(h.dflag.size()) - 1;
    if (n < 1) throw Error(ErrorKind::illegal_move, "horn dimension must be at least 1");
    if (!is_dflag(X.poset(), h.dflag)) throw Error(ErrorKind::illegal_move, "horn flag is not a d-flag");
    if (!is_admissible(h)) throw Error(ErrorKind::illegal_move, "horn is not admissible");
    SSet D = simplex_set(X.poset(), h.dflag);
    std::vector<int> hidx;
    SSet H = subset(D, horn_mask(D, h.k), &hidx);
    auto diags = check_map(H, X, attach);
    if (!diags.empty()) throw Error(ErrorKind::map, "attaching map: " + diags.front().message);

    int counter = 0;
    std::string tid = new_top.empty() ? fresh_name(X, counter) : new_top;
    SSet Y(X.poset_ptr());
    for (int c = 0; c < X.size(); ++c) Y.add_cell(X.id(c), X.dim(c), X.cell(c).faces, X.dim(c) == 0 ? X.label(c) : -1);
    std::string fid = new_face.empty() ? fresh_name(Y, counter) : new_face;
    if (fid == tid || Y.find(fid) >= 0 || Y.find(tid) >= 0)
        throw Error(ErrorKind::identifier, "expansion cell ids collide");

    const int top_in_D = D.size() - 1;
    const int face_in_D = D.face(top_in_D, h.k).cell;
    std::vector<Simplex> face_faces;
    for (const auto& f : D.cell(face_in_D).faces) face_faces.push_back(apply_map(attach, Simplex{f.eta, hidx[f.cell]}));
    int label = n == 1 ? h.dflag[1 - h.k] : -1;
    int tau = Y.add_cell(fid, n - 1, std::move(face_faces), label);
    std::vector<Simplex> top_faces;
    for (int i = 0; i <= n; ++i) {
        if (i == h.k) {
            top_faces.push_back(nd(tau, n - 1));
            continue;
        }
        const Simplex& f = D.cell(top_in_D).faces[i];
        top_faces.push_back(apply_map(attach, Simplex{f.eta, hidx[f.cell]}));
    }
    Y.add_cell(tid, n, std::move(top_faces));
    std::vector<int> order = X.label_order();
    if (n == 1) order.push_back(tau);
    Y.set_label_order(order);
    Y.finalize();

    MoveRecord rec;
    rec.kind = MoveRecord::Kind::expand;
    rec.top = tid;
    rec.face = fid;
    rec.k = h.k;
    rec.dflag = h.dflag;
    rec.attach = to_ids(X, attach);
    rec.strict = is_strictly_admissible(X.poset(), h.dflag, h.k);
    return {std::move(Y), rec};
}

std::vector<IdSimplex> to_ids(const SSet& Y, const SMap& f) {
    std::vector<IdSimplex> out;
    for (const auto& s : f.img) out.push_back({word_of(s.eta), Y.id(s.cell)});
    return out;
}

SMap from_ids(const SSet& Y, const std::vector<IdSimplex>& f, const std::vector<int>& dims) {
    SMap m;
    for (size_t i = 0; i < f.size(); ++i) {
        const int c = Y.index(f[i].cell);
        const auto& w = f[i].word;
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] < 0 || w[j] >= dims[i] || (j && w[j] >= w[j - 1]))
                throw Error(ErrorKind::map, "degeneracy word is not strictly decreasing and in range");
        if (dims[i] - static_cast<int>(w.size()) != Y.dim(c))
            throw Error(ErrorKind::map, "image of dimension " + std::to_string(dims[i]) + " does not fit '" + f[i].cell + "'");
        m.img.push_back(Simplex{surj_of(w, dims[i]), c});
    }
    return m;
}

SSet apply_move(const SSet& X, MoveRecord& rec) {
    if (rec.kind == MoveRecord::Kind::collapse) {
        int top = X.find(rec.top);
        if (top < 0) throw Error(ErrorKind::illegal_move, "unknown top cell '" + rec.top + "'");
        if (rec.k < 0 || rec.k > X.dim(top)) throw Error(ErrorKind::illegal_move, "face index out of range");
        auto [Y, r] = collapse(X, top, X.face(top, rec.k).cell, rec.k);
        rec.strict = r.strict;
        return std::move(Y);
    }
    if (!is_dflag(X.poset(), rec.dflag)) throw Error(ErrorKind::illegal_move, "horn flag is not a d-flag");
    SSet H = horn(X.poset(), HornSpec{rec.dflag, rec.k});
    if (static_cast<int>(rec.attach.size()) != H.size())
        throw Error(ErrorKind::illegal_move, "attaching map has the wrong number of cells");
    std::vector<int> dims(H.size());
    for (int c = 0; c < H.size(); ++c) dims[c] = H.dim(c);
    auto [Y, r] = expand(X, HornSpec{rec.dflag, rec.k}, from_ids(X, rec.attach, dims), rec.top, rec.face);
    rec.strict = r.strict;
    return std::move(Y);
}

}  // namespace strathom

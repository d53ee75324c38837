#include "strathom/sset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace strathom {

Mono identity_mono(int n) {
    Mono m(n + 1);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

Mono coface_mono(int n, int i) {
    Mono m;
    for (int v = 0; v <= n; ++v)
        if (v != i) m.push_back(v);
    return m;
}

Mono compose_mono(const Mono& a, const Mono& b) {
    Mono r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

bool is_surjection(const Mono& m, int target_dim) {
    if (m.empty() || m.front() != 0 || m.back() != target_dim) return false;
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] != m[i - 1] && m[i] != m[i - 1] + 1) return false;
    return true;
}

void factor_mono(const Mono& theta, Mono& inj, Mono& surj) {
    inj.clear();
    surj.clear();
    for (int v : theta) {
        if (inj.empty() || inj.back() != v) inj.push_back(v);
        surj.push_back(static_cast<int>(inj.size()) - 1);
    }
}

Word word_of(const Mono& surj) {
    Word w;
    for (int j = static_cast<int>(surj.size()) - 2; j >= 0; --j)
        if (surj[j] == surj[j + 1]) w.push_back(j);
    return w;
}

Mono surj_of(const Word& w, int source_dim) {
    Mono m(source_dim + 1, 0);
    std::vector<char> rep(source_dim + 1, 0);
    for (int j : w) rep.at(j) = 1;
    for (int j = 0; j < source_dim; ++j) m[j + 1] = m[j] + (rep[j] ? 0 : 1);
    return m;
}

bool Simplex::nondegenerate() const {
    for (size_t i = 0; i < eta.size(); ++i)
        if (eta[i] != static_cast<int>(i)) return false;
    return true;
}

Simplex nd(int cell, int dim) { return Simplex{identity_mono(dim), cell}; }

int SSet::add_cell(std::string id, int dim, std::vector<Simplex> faces, int label) {
    if (by_id_.count(id)) throw Error(ErrorKind::identifier, "duplicate cell id '" + id + "'");
    int c = size();
    by_id_.emplace(id, c);
    cells_.push_back(Cell{std::move(id), dim, std::move(faces)});
    labels_.push_back(label);
    final_ = false;
    return c;
}

void SSet::finalize() {
    const int n = size();
    for (int c = 0; c < n; ++c) {
        const Cell& cl = cells_[c];
        if (cl.dim < 0) throw Error(ErrorKind::precondition, "negative dimension on '" + cl.id + "'");
        if (cl.dim == 0) {
            if (!cl.faces.empty()) throw Error(ErrorKind::precondition, "vertex '" + cl.id + "' has faces");
            continue;
        }
        if (static_cast<int>(cl.faces.size()) != cl.dim + 1)
            throw Error(ErrorKind::precondition, "cell '" + cl.id + "' has wrong face count");
        for (const auto& f : cl.faces) {
            if (f.cell < 0 || f.cell >= n)
                throw Error(ErrorKind::precondition, "cell '" + cl.id + "' has a dangling face");
            if (f.dim() != cl.dim - 1 || !is_surjection(f.eta, cells_[f.cell].dim))
                throw Error(ErrorKind::precondition, "cell '" + cl.id + "' has a malformed face word");
        }
    }
    verts_.assign(n, {});
    std::vector<char> state(n, 0);
    std::function<void(int)> visit = [&](int c) {
        if (state[c] == 2) return;
        if (state[c] == 1) throw Error(ErrorKind::precondition, "cyclic face structure at '" + cells_[c].id + "'");
        state[c] = 1;
        const Cell& cl = cells_[c];
        std::vector<int> v;
        if (cl.dim == 0) {
            v.push_back(c);
        } else {
            const Simplex& last = cl.faces[cl.dim];
            visit(last.cell);
            for (int j = 0; j < cl.dim; ++j) v.push_back(verts_[last.cell][last.eta[j]]);
            const Simplex& first = cl.faces[0];
            visit(first.cell);
            v.push_back(verts_[first.cell][first.eta[cl.dim - 1]]);
        }
        verts_[c] = std::move(v);
        state[c] = 2;
    };
    for (int c = 0; c < n; ++c) visit(c);
    if (label_order_.size() != static_cast<size_t>(std::count_if(cells_.begin(), cells_.end(),
                                                                   [](const Cell& x) { return x.dim == 0; }))) {
        label_order_.clear();
        for (int c = 0; c < n; ++c)
            if (cells_[c].dim == 0) label_order_.push_back(c);
    }
    final_ = true;
}

int SSet::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

int SSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? -1 : it->second;
}

int SSet::index(const std::string& id) const {
    int c = find(id);
    if (c < 0) throw Error(ErrorKind::identifier, "unknown cell '" + id + "'");
    return c;
}

DFlag SSet::flag(int c) const {
    DFlag f;
    for (int v : verts_[c]) f.push_back(labels_[v]);
    return f;
}

int SSet::max_label(int c) const { return labels_[verts_[c].back()]; }

std::vector<int> SSet::count_by_dim() const {
    std::vector<int> out(std::max(0, dim() + 1), 0);
    for (const auto& c : cells_) ++out[c.dim];
    return out;
}

Simplex SSet::face(const Simplex& x, int i) const { return apply(x, coface_mono(x.dim(), i)); }

Simplex SSet::apply(const Simplex& x, const Mono& theta) const {
    Mono g = compose_mono(x.eta, theta);
    Mono inj, surj;
    factor_mono(g, inj, surj);
    Simplex y = face_along(x.cell, inj);
    return Simplex{compose_mono(y.eta, surj), y.cell};
}

Simplex SSet::face_along(int c, const Mono& inj) const {
    const int n = cells_[c].dim;
    const int m = static_cast<int>(inj.size()) - 1;
    if (m == n) return nd(c, n);
    int j = n;
    for (int k = m; k >= 0 && inj[k] == j; --k) --j;
    const Simplex& f = cells_[c].faces[j];
    Mono inj2(inj.size());
    for (size_t i = 0; i < inj.size(); ++i) inj2[i] = inj[i] - (inj[i] > j ? 1 : 0);
    return apply(f, inj2);
}

std::vector<int> SSet::closure(int c) const {
    std::vector<int> out{c};
    std::set<int> seen{c};
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& f : cells_[out[i]].faces)
            if (seen.insert(f.cell).second) out.push_back(f.cell);
    return out;
}

std::vector<std::vector<int>> SSet::cofaces() const {
    std::vector<std::vector<int>> co(size());
    for (int c = 0; c < size(); ++c)
        for (const auto& f : cells_[c].faces)
            if (co[f.cell].empty() || co[f.cell].back() != c) co[f.cell].push_back(c);
    return co;
}

DFlag flag_of(const SSet& X, int c) { return X.flag(c); }

std::vector<Diagnostic> validate(const SSet& X) {
    std::vector<Diagnostic> out;
    const Poset& P = X.poset();
    for (int c = 0; c < X.size(); ++c) {
        const Cell& cl = X.cell(c);
        if (cl.dim == 0) {
            int l = X.label(c);
            if (l < 0 || l >= P.size())
                out.push_back({"missing-label", {cl.id}, "vertex '" + cl.id + "' has no valid label"});
            continue;
        }
        if (cl.dim == 1) {
            int a = X.label(X.vertices(c)[0]), b = X.label(X.vertices(c)[1]);
            if (a >= 0 && b >= 0 && !P.leq(a, b))
                out.push_back({"edge-monotonicity",
                               {cl.id, X.id(X.vertices(c)[0]), X.id(X.vertices(c)[1])},
                               "edge '" + cl.id + "' runs from label " + P.name(a) + " to " + P.name(b)});
        }
        if (cl.dim < 2) continue;
        for (int j = 1; j <= cl.dim; ++j)
            for (int i = 0; i < j; ++i) {
                Simplex lhs = X.face(X.face(c, j), i);
                Simplex rhs = X.face(X.face(c, i), j - 1);
                if (lhs != rhs)
                    out.push_back({"simplicial-identity", {cl.id},
                                   "d" + std::to_string(i) + "d" + std::to_string(j) + " != d" +
                                       std::to_string(j - 1) + "d" + std::to_string(i) + " on '" + cl.id + "'"});
            }
    }
    return out;
}

Simplex apply_map(const SMap& f, const Simplex& s) {
    const Simplex& t = f.img[s.cell];
    return Simplex{compose_mono(t.eta, s.eta), t.cell};
}

std::vector<Diagnostic> check_map(const SSet& X, const SSet& Y, const SMap& f) {
    std::vector<Diagnostic> out;
    if (X.poset() != Y.poset()) {
        out.push_back({"poset", {}, "source and target posets differ"});
        return out;
    }
    if (f.img.size() != static_cast<size_t>(X.size())) {
        out.push_back({"assignment", {}, "map does not assign every source cell"});
        return out;
    }
    for (int c = 0; c < X.size(); ++c) {
        const Simplex& y = f.img[c];
        if (y.cell < 0 || y.cell >= Y.size() || y.dim() != X.dim(c) || !is_surjection(y.eta, Y.dim(y.cell))) {
            out.push_back({"assignment", {X.id(c)}, "bad image for '" + X.id(c) + "'"});
            continue;
        }
        if (X.dim(c) == 0 && Y.label(y.cell) != X.label(c))
            out.push_back({"stratum", {X.id(c)}, "label not preserved at '" + X.id(c) + "'"});
    }
    if (!out.empty()) return out;
    for (int c = 0; c < X.size(); ++c)
        for (int i = 0; i <= X.dim(c) && X.dim(c) > 0; ++i)
            if (apply_map(f, X.face(c, i)) != Y.face(f.img[c], i))
                out.push_back({"face", {X.id(c)}, "map does not commute with d" + std::to_string(i) + " at '" +
                                                      X.id(c) + "'"});
    return out;
}

SMap compose(const SMap& f, const SMap& g) {
    SMap h;
    h.img.reserve(f.img.size());
    for (const auto& s : f.img) h.img.push_back(apply_map(g, s));
    return h;
}

SMap identity_map(const SSet& X) {
    SMap f;
    for (int c = 0; c < X.size(); ++c) f.img.push_back(nd(c, X.dim(c)));
    return f;
}

bool is_injective(const SMap& f) {
    std::set<int> seen;
    for (const auto& s : f.img)
        if (!s.nondegenerate() || !seen.insert(s.cell).second) return false;
    return true;
}

bool is_isomorphism(const SSet& X, const SSet& Y, const SMap& f) {
    return X.size() == Y.size() && f.img.size() == static_cast<size_t>(X.size()) && is_injective(f);
}

std::vector<char> face_closure(const SSet& X, const std::vector<char>& seed) {
    std::vector<char> keep = seed;
    std::vector<int> stack;
    for (int c = 0; c < X.size(); ++c)
        if (keep[c]) stack.push_back(c);
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (const auto& f : X.cell(c).faces)
            if (!keep[f.cell]) {
                keep[f.cell] = 1;
                stack.push_back(f.cell);
            }
    }
    return keep;
}

SSet subset(const SSet& X, const std::vector<char>& keep, std::vector<int>* new_index) {
    std::vector<int> idx(X.size(), -1);
    int k = 0;
    for (int c = 0; c < X.size(); ++c)
        if (keep[c]) idx[c] = k++;
    SSet S(X.poset_ptr());
    for (int c = 0; c < X.size(); ++c) {
        if (!keep[c]) continue;
        std::vector<Simplex> faces;
        for (const auto& f : X.cell(c).faces) {
            if (!keep[f.cell])
                throw Error(ErrorKind::closure, "cell '" + X.id(c) + "' needs face '" + X.id(f.cell) + "'");
            faces.push_back(Simplex{f.eta, idx[f.cell]});
        }
        S.add_cell(X.id(c), X.dim(c), std::move(faces), X.dim(c) == 0 ? X.label(c) : -1);
    }
    std::vector<int> order;
    for (int v : X.label_order())
        if (keep[v]) order.push_back(idx[v]);
    S.set_label_order(order);
    S.finalize();
    if (new_index) *new_index = idx;
    return S;
}

SSet subset(const SSet& X, const std::vector<std::string>& keep_ids) {
    std::vector<char> keep(X.size(), 0);
    for (const auto& id : keep_ids) keep[X.index(id)] = 1;
    return subset(X, keep);
}

SMap inclusion_map(const SSet& X, const std::vector<char>& keep) {
    SMap f;
    for (int c = 0; c < X.size(); ++c)
        if (keep[c]) f.img.push_back(nd(c, X.dim(c)));
    return f;
}

std::string fresh_id(const std::string& base, const SSet& taken, const std::string& tag) {
    if (taken.find(base) < 0) return base;
    std::string cand = base + "~" + tag;
    for (int n = 2; taken.find(cand) >= 0; ++n) cand = base + "~" + tag + std::to_string(n);
    return cand;
}

PushoutResult pushout(const SSet& A, const SSet& B, const SMap& i, const SSet& C, const SMap& f) {
    if (A.poset() != B.poset() || A.poset() != C.poset())
        throw Error(ErrorKind::poset, "pushout of sets over different posets");
    if (i.img.size() != static_cast<size_t>(A.size()) || f.img.size() != static_cast<size_t>(A.size()))
        throw Error(ErrorKind::precondition, "pushout maps do not match the shared source");
    if (!is_injective(i)) throw Error(ErrorKind::precondition, "pushout requires an injective leg");
    std::vector<int> pre(B.size(), -1);  // B cell -> A cell
    for (int a = 0; a < A.size(); ++a) pre[i.img[a].cell] = a;

    PushoutResult r;
    r.D = SSet(C.poset_ptr());
    for (int c = 0; c < C.size(); ++c)
        r.D.add_cell(C.id(c), C.dim(c), C.cell(c).faces, C.dim(c) == 0 ? C.label(c) : -1);
    r.new_of_B.assign(B.size(), -1);
    int next = C.size();
    std::vector<std::string> ids(B.size());
    for (int b = 0; b < B.size(); ++b)
        if (pre[b] < 0) r.new_of_B[b] = next++;
    for (int b = 0; b < B.size(); ++b) {
        if (pre[b] >= 0) continue;
        std::vector<Simplex> faces;
        for (const auto& fc : B.cell(b).faces) {
            if (pre[fc.cell] >= 0) {
                const Simplex& t = f.img[pre[fc.cell]];
                faces.push_back(Simplex{compose_mono(t.eta, fc.eta), t.cell});
            } else {
                faces.push_back(Simplex{fc.eta, r.new_of_B[fc.cell]});
            }
        }
        r.D.add_cell(fresh_id(B.id(b), r.D, "b"), B.dim(b), std::move(faces), B.dim(b) == 0 ? B.label(b) : -1);
    }
    std::vector<int> order = C.label_order();
    for (int v : B.label_order())
        if (pre[v] < 0) order.push_back(r.new_of_B[v]);
    r.D.set_label_order(order);
    r.D.finalize();
    r.from_C = identity_map(C);
    for (int b = 0; b < B.size(); ++b)
        r.from_B.img.push_back(pre[b] >= 0 ? f.img[pre[b]] : nd(r.new_of_B[b], B.dim(b)));
    return r;
}

CoproductResult coproduct(const SSet& X, const SSet& Y) {
    if (X.poset() != Y.poset()) throw Error(ErrorKind::poset, "coproduct of sets over different posets");
    CoproductResult r;
    r.S = SSet(X.poset_ptr());
    for (int c = 0; c < X.size(); ++c) {
        r.of_X.push_back(r.S.add_cell(X.id(c), X.dim(c), X.cell(c).faces, X.dim(c) == 0 ? X.label(c) : -1));
    }
    const int off = X.size();
    for (int c = 0; c < Y.size(); ++c) {
        std::vector<Simplex> faces = Y.cell(c).faces;
        for (auto& f : faces) f.cell += off;
        r.of_Y.push_back(
            r.S.add_cell(fresh_id(Y.id(c), r.S, "1"), Y.dim(c), std::move(faces), Y.dim(c) == 0 ? Y.label(c) : -1));
    }
    std::vector<int> order = X.label_order();
    for (int v : Y.label_order()) order.push_back(v + off);
    r.S.set_label_order(order);
    r.S.finalize();
    return r;
}

// ---- products ----

static void enumerate_walks(int a, int b, std::vector<std::vector<std::pair<int, int>>>& out) {
    std::vector<std::pair<int, int>> cur{{0, 0}};
    std::function<void()> rec = [&]() {
        auto [u, v] = cur.back();
        if (u == a && v == b) {
            out.push_back(cur);
            return;
        }
        const int du[3] = {1, 0, 1}, dv[3] = {0, 1, 1};
        for (int t = 0; t < 3; ++t) {
            int nu = u + du[t], nv = v + dv[t];
            if (nu > a || nv > b) continue;
            cur.emplace_back(nu, nv);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

static std::string steps_of(const std::vector<std::pair<int, int>>& walk) {
    std::string s;
    for (size_t t = 1; t < walk.size(); ++t) {
        int du = walk[t].first - walk[t - 1].first, dv = walk[t].second - walk[t - 1].second;
        s += (du && dv) ? 'c' : (du ? 'a' : 'b');
    }
    return s;
}

std::string Product::key(int x, int s, const std::vector<std::pair<int, int>>& walk) {
    return std::to_string(x) + "/" + std::to_string(s) + "/" + steps_of(walk);
}

int Product::lookup(int x, int s, const std::vector<std::pair<int, int>>& walk) const {
    auto it = key_index.find(key(x, s, walk));
    return it == key_index.end() ? -1 : it->second;
}

Simplex product_simplex(const Product& prod, const SSet& X, const SSet& S, const Simplex& a, const Simplex& b) {
    (void)X;
    (void)S;
    const int q = a.dim();
    std::vector<std::pair<int, int>> walk;
    Mono rho(q + 1);
    for (int j = 0; j <= q; ++j) {
        std::pair<int, int> p{a.eta[j], b.eta[j]};
        if (walk.empty() || walk.back() != p) walk.push_back(p);
        rho[j] = static_cast<int>(walk.size()) - 1;
    }
    int c = prod.lookup(a.cell, b.cell, walk);
    if (c < 0) throw Error(ErrorKind::precondition, "product simplex outside the enumerated cells");
    return Simplex{rho, c};
}

Product outer_product(const SSet& X, const SSet& S) {
    Product prod;
    std::vector<ProductCell> cells;
    for (int x = 0; x < X.size(); ++x)
        for (int s = 0; s < S.size(); ++s) {
            std::vector<std::vector<std::pair<int, int>>> walks;
            enumerate_walks(X.dim(x), S.dim(s), walks);
            for (auto& w : walks) cells.push_back(ProductCell{x, s, std::move(w)});
        }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const ProductCell& l, const ProductCell& r) { return l.walk.size() < r.walk.size(); });
    for (size_t i = 0; i < cells.size(); ++i)
        prod.key_index.emplace(Product::key(cells[i].x, cells[i].s, cells[i].walk), static_cast<int>(i));
    prod.P = SSet(X.poset_ptr());
    for (const auto& pc : cells) {
        const int q = static_cast<int>(pc.walk.size()) - 1;
        std::vector<Simplex> faces;
        if (q > 0) {
            for (int t = 0; t <= q; ++t) {
                Mono u, v;
                for (int j = 0; j <= q; ++j)
                    if (j != t) {
                        u.push_back(pc.walk[j].first);
                        v.push_back(pc.walk[j].second);
                    }
                Simplex xa = X.apply(nd(pc.x, X.dim(pc.x)), u);
                Simplex sb = S.apply(nd(pc.s, S.dim(pc.s)), v);
                faces.push_back(product_simplex(prod, X, S, xa, sb));
            }
        }
        std::string id = X.id(pc.x) + "*" + S.id(pc.s);
        if (q > 0) id += ":" + steps_of(pc.walk);
        prod.P.add_cell(id, q, std::move(faces), q == 0 ? X.label(pc.x) : -1);
    }
    prod.P.finalize();
    prod.info = std::move(cells);
    return prod;
}

// ---- standard simplices ----

std::string subset_id(const std::vector<int>& verts) {
    std::string s;
    bool dots = !verts.empty() && verts.back() >= 10;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (dots && i) s += ".";
        s += std::to_string(verts[i]);
    }
    return s;
}

SSet complex_from_simplices(const Poset& P, const std::vector<std::string>& vertex_ids,
                            const std::vector<int>& vertex_labels,
                            const std::vector<std::vector<int>>& simplices, const std::string& sep) {
    // keyed by vertex set; the stored tuple keeps the order of the first simplex that produced it
    std::map<std::vector<int>, std::vector<int>> all;
    for (int v = 0; v < static_cast<int>(vertex_ids.size()); ++v) all.emplace(std::vector<int>{v}, std::vector<int>{v});
    for (const auto& s : simplices) {
        const int n = static_cast<int>(s.size());
        if (n > 30) throw Error(ErrorKind::parameter, "simplex too large");
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) sub.push_back(s[i]);
            std::vector<int> key = sub;
            std::sort(key.begin(), key.end());
            all.emplace(std::move(key), std::move(sub));
        }
    }
    std::vector<const std::pair<const std::vector<int>, std::vector<int>>*> order;
    for (const auto& kv : all) order.push_back(&kv);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto* a, const auto* b) { return a->first.size() < b->first.size(); });
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < order.size(); ++i) index.emplace(order[i]->first, static_cast<int>(i));
    SSet X(P);
    for (const auto* kv : order) {
        const std::vector<int>& s = kv->second;
        std::string id;
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) id += sep;
            id += vertex_ids[s[i]];
        }
        std::vector<Simplex> faces;
        const int d = static_cast<int>(s.size()) - 1;
        if (d > 0)
            for (int i = 0; i <= d; ++i) {
                std::vector<int> f = s;
                f.erase(f.begin() + i);
                std::sort(f.begin(), f.end());
                faces.push_back(nd(index.at(f), d - 1));
            }
        X.add_cell(fresh_id(id, X, "c"), d, std::move(faces), d == 0 ? vertex_labels[s[0]] : -1);
    }
    X.finalize();
    return X;
}

SSet simplex_set(const Poset& P, const DFlag& J) {
    const int n = static_cast<int>(J.size());
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return complex_from_simplices(P, ids, J, {all}, n > 10 ? "." : "");
}

SSet unfiltered_simplex(int n) { return simplex_set(Poset::point(), DFlag(n + 1, 0)); }

std::vector<char> boundary_mask(const SSet& simplex) {
    std::vector<char> m(simplex.size(), 1);
    const int top = simplex.size() - 1;
    m[top] = 0;
    return m;
}

std::vector<char> horn_mask(const SSet& simplex, int k) {
    std::vector<char> m = boundary_mask(simplex);
    const int top = simplex.size() - 1;
    if (simplex.dim(top) > 0) m[simplex.face(top, k).cell] = 0;
    return m;
}

std::vector<int> subset_of_cell(const SSet& simplex, int c) { return simplex.vertices(c); }

// ---- isomorphism ----

bool same_by_id(const SSet& X, const SSet& Y) {
    if (X.size() != Y.size() || X.poset() != Y.poset()) return false;
    for (int c = 0; c < X.size(); ++c) {
        int d = Y.find(X.id(c));
        if (d < 0 || Y.dim(d) != X.dim(c)) return false;
        if (X.dim(c) == 0 && X.label(c) != Y.label(d)) return false;
        for (int i = 0; i < static_cast<int>(X.cell(c).faces.size()); ++i) {
            const Simplex& a = X.cell(c).faces[i];
            const Simplex& b = Y.cell(d).faces[i];
            if (a.eta != b.eta || X.id(a.cell) != Y.id(b.cell)) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const SSet& X, const SSet& Y) {
    if (X.size() != Y.size() || X.poset() != Y.poset() || X.count_by_dim() != Y.count_by_dim())
        return std::nullopt;
    if (same_by_id(X, Y)) {
        std::vector<int> m(X.size());
        for (int c = 0; c < X.size(); ++c) m[c] = Y.find(X.id(c));
        return m;
    }
    auto cx = X.cofaces(), cy = Y.cofaces();
    auto signature = [](const SSet& S, const std::vector<std::vector<int>>& co, int c) {
        std::vector<int> sig{S.dim(c), static_cast<int>(co[c].size())};
        for (int l : S.flag(c)) sig.push_back(l);
        for (const auto& f : S.cell(c).faces) {
            sig.push_back(-1);
            sig.insert(sig.end(), f.eta.begin(), f.eta.end());
        }
        return sig;
    };
    std::vector<std::vector<int>> sx(X.size()), sy(Y.size());
    for (int c = 0; c < X.size(); ++c) sx[c] = signature(X, cx, c);
    for (int c = 0; c < Y.size(); ++c) sy[c] = signature(Y, cy, c);
    {
        auto a = sx, b = sy;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> order(X.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return X.dim(a) > X.dim(b); });
    std::vector<int> fwd(X.size(), -1), bwd(Y.size(), -1);
    std::vector<int> trail;

    // assign x -> y and propagate to faces; false on conflict (trail records assignments)
    std::function<bool(int, int)> assign = [&](int x, int y) -> bool {
        if (fwd[x] >= 0) return fwd[x] == y;
        if (bwd[y] >= 0) return false;
        if (sx[x] != sy[y]) return false;
        fwd[x] = y;
        bwd[y] = x;
        trail.push_back(x);
        const auto& fx = X.cell(x).faces;
        const auto& fy = Y.cell(y).faces;
        for (size_t i = 0; i < fx.size(); ++i)
            if (!assign(fx[i].cell, fy[i].cell)) return false;
        return true;
    };
    auto undo = [&](size_t mark) {
        while (trail.size() > mark) {
            int x = trail.back();
            trail.pop_back();
            bwd[fwd[x]] = -1;
            fwd[x] = -1;
        }
    };
    std::function<bool(size_t)> search = [&](size_t pos) -> bool {
        while (pos < order.size() && fwd[order[pos]] >= 0) ++pos;
        if (pos == order.size()) return true;
        int x = order[pos];
        for (int y = 0; y < Y.size(); ++y) {
            if (bwd[y] >= 0 || sy[y] != sx[x]) continue;
            size_t mark = trail.size();
            if (assign(x, y) && search(pos + 1)) return true;
            undo(mark);
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return fwd;
}

}  // namespace strathom

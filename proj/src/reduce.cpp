#include "strathom/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace strathom {

namespace {

bool agree(const SSet& a, const SSet& b) {
    if (a.size() != b.size() || a.poset() != b.poset()) return false;
    return same_by_id(a, b) || find_isomorphism(a, b).has_value();
}

SSet renamed(const SSet& X, const std::vector<std::string>& ids) {
    SSet Y(X.poset_ptr());
    for (int c = 0; c < X.size(); ++c) Y.add_cell(ids[c], X.dim(c), X.cell(c).faces, X.dim(c) == 0 ? X.label(c) : -1);
    Y.set_label_order(X.label_order());
    Y.finalize();
    return Y;
}

std::string leg_prefix(size_t i) { return "leg " + std::to_string(i) + ": "; }

// The base of a presentation leg as seen from its neighbour.
std::optional<SSet> base_object(const Leg& leg, std::string& why) {
    std::vector<int> idx;
    SSet A = subset(leg.B, leg.pres.base, &idx);
    if (leg.incl.empty()) return A;
    std::vector<std::string> ids(A.size());
    std::vector<char> hit(A.size(), 0);
    for (const auto& [outer, inner] : leg.incl) {
        int b = leg.B.find(inner);
        if (b < 0 || idx[b] < 0) {
            why = "inclusion names '" + inner + "', which is not a base cell";
            return std::nullopt;
        }
        if (hit[idx[b]]++) {
            why = "inclusion hits '" + inner + "' twice";
            return std::nullopt;
        }
        ids[idx[b]] = outer;
    }
    if (std::count(hit.begin(), hit.end(), 0)) {
        why = "inclusion does not cover the base";
        return std::nullopt;
    }
    try {
        return renamed(A, ids);
    } catch (const Error& e) {
        why = e.what();
        return std::nullopt;
    }
}

}  // namespace

std::vector<Diagnostic> verify(const Deformation& d, std::vector<std::vector<char>>* strict) {
    std::vector<Diagnostic> out;
    const size_t L = d.legs.size();
    if (strict) strict->assign(L, {});
    std::vector<std::optional<SSet>> obj(L + 1);
    obj[0] = d.from;
    if (L == 0) {
        if (d.from && d.to && !agree(*d.from, *d.to)) out.push_back({"endpoint", {}, "endpoints differ"});
        return out;
    }
    obj[L] = d.to;
    auto place = [&](size_t pos, SSet X, const std::string& where) {
        if (!obj[pos]) {
            obj[pos] = std::move(X);
            return;
        }
        if (!agree(*obj[pos], X))
            out.push_back({"endpoint", {}, where + "object " + std::to_string(pos) + " does not match its neighbour"});
    };
    std::vector<char> done(L, 0);
    for (size_t i = 0; i < L; ++i) {
        const Leg& leg = d.legs[i];
        if (leg.kind != Leg::Kind::presentation) continue;
        done[i] = 1;
        auto r = replay(leg.B, leg.pres, strict ? &(*strict)[i] : nullptr);
        if (!r.empty()) {
            out.push_back({r.front().code, r.front().cells, leg_prefix(i) + r.front().message});
            continue;
        }
        std::string why;
        auto small = base_object(leg, why);
        if (!small) {
            out.push_back({"inclusion", {}, leg_prefix(i) + why});
            continue;
        }
        const bool fwd = leg.dir == Leg::Dir::forward;
        place(fwd ? i : i + 1, std::move(*small), leg_prefix(i));
        place(fwd ? i + 1 : i, leg.B, leg_prefix(i));
    }
    for (bool progress = true; progress;) {
        progress = false;
        for (size_t i = 0; i < L; ++i) {
            if (done[i]) continue;
            const Leg& leg = d.legs[i];
            const bool fwd = leg.dir == Leg::Dir::forward;
            const size_t src = fwd ? i : i + 1, dst = fwd ? i + 1 : i;
            if (!obj[src]) continue;
            done[i] = 1;
            progress = true;
            SSet cur = *obj[src];
            bool ok = true;
            for (size_t j = 0; j < leg.moves.size() && ok; ++j) {
                MoveRecord rec = leg.moves[j];
                try {
                    cur = apply_move(cur, rec);
                    if (strict) (*strict)[i].push_back(rec.strict);
                } catch (const Error& e) {
                    out.push_back({"step", {rec.top}, leg_prefix(i) + "step " + std::to_string(j) + ": " + e.what()});
                    ok = false;
                }
            }
            if (ok) place(dst, std::move(cur), leg_prefix(i));
        }
    }
    for (size_t i = 0; i < L; ++i)
        if (!done[i]) out.push_back({"endpoint", {}, leg_prefix(i) + "no endpoint to replay from"});
    return out;
}

Deformation invert(const Deformation& d) {
    Deformation r;
    r.from = d.to;
    r.to = d.from;
    r.legs.assign(d.legs.rbegin(), d.legs.rend());
    for (auto& l : r.legs) l.dir = l.dir == Leg::Dir::forward ? Leg::Dir::backward : Leg::Dir::forward;
    return r;
}

Deformation concat(const Deformation& d1, const Deformation& d2) {
    if (d1.to && d2.from && !agree(*d1.to, *d2.from))
        throw Error(ErrorKind::endpoint, "end of the first deformation does not match the start of the second");
    Deformation r;
    r.from = d1.from;
    r.to = d2.to;
    r.legs = d1.legs;
    r.legs.insert(r.legs.end(), d2.legs.begin(), d2.legs.end());
    return r;
}

CollapseRun collapse_greedy(const SSet& X, const std::vector<char>& protect, bool strict_only, bool descending,
                            long max_moves) {
    const int n = X.size();
    const auto co = X.cofaces();
    std::vector<int> by_id(n);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return X.id(a) < X.id(b); });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[by_id[i]] = i;

    std::vector<char> alive(n, 1);
    std::vector<int> live_co(n);
    for (int c = 0; c < n; ++c) live_co[c] = static_cast<int>(co[c].size());
    auto prot = [&](int c) { return !protect.empty() && protect[c]; };

    auto legal = [&](int top, int k) {
        if (!alive[top] || live_co[top] != 0 || prot(top)) return false;
        const Simplex tau = X.face(top, k);
        if (!tau.nondegenerate() || !alive[tau.cell] || live_co[tau.cell] != 1 || prot(tau.cell)) return false;
        const DFlag J = X.flag(top);
        if (!is_admissible(J, k) || (strict_only && !is_strictly_admissible(X.poset(), J, k))) return false;
        for (int i = 0; i <= X.dim(top); ++i) {
            if (i == k) continue;
            auto cl = X.closure(X.face(top, i).cell);
            if (std::find(cl.begin(), cl.end(), tau.cell) != cl.end()) return false;
        }
        return true;
    };
    using Key = std::tuple<int, int, int>;  // dimension key, id rank, k
    std::set<Key> queue;
    auto consider = [&](int top) {
        if (X.dim(top) == 0 || !alive[top] || live_co[top] != 0) return;
        for (int k = 0; k <= X.dim(top); ++k)
            if (legal(top, k)) queue.emplace(descending ? -X.dim(top) : X.dim(top), rank[top], k);
    };
    for (int c = 0; c < n; ++c) consider(c);

    CollapseRun run;
    while (!queue.empty() && (max_moves < 0 || static_cast<long>(run.moves.size()) < max_moves)) {
        auto [dk, r, k] = *queue.begin();
        queue.erase(queue.begin());
        const int top = by_id[r];
        if (!legal(top, k)) continue;
        const int tau = X.face(top, k).cell;
        run.moves.push_back({top, tau, k});
        alive[top] = alive[tau] = 0;
        std::set<int> touched;
        for (int c : {top, tau}) {
            std::set<int> fs;
            for (const auto& f : X.cell(c).faces) fs.insert(f.cell);
            for (int f : fs) {
                --live_co[f];
                touched.insert(f);
            }
        }
        std::set<int> tops;
        for (int f : touched) {
            tops.insert(f);
            for (int g : co[f])
                if (alive[g]) tops.insert(g);
        }
        for (int t : tops) consider(t);
    }
    run.keep = alive;
    return run;
}

std::vector<std::vector<int>> counts_by_stratum(const SSet& X) {
    std::vector<std::vector<int>> out(std::max(0, X.dim() + 1), std::vector<int>(X.poset().size(), 0));
    for (int c = 0; c < X.size(); ++c) ++out[X.dim(c)][X.max_label(c)];
    return out;
}

ReduceResult reduce(const SSet& X, const ReduceStrategy& s) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<char> protect(X.size(), 0);
    for (const auto& id : s.protect) protect[X.index(id)] = 1;
    CollapseRun run = collapse_greedy(X, protect, s.strict_only, s.descending, s.max_rounds);
    ReduceResult r;
    r.X = subset(X, run.keep);
    r.cert.from = X;
    r.cert.to = r.X;
    if (!run.moves.empty()) {
        Leg leg;
        leg.dir = Leg::Dir::forward;
        leg.kind = Leg::Kind::moves;
        for (const auto& m : run.moves) {
            MoveRecord rec;
            rec.kind = MoveRecord::Kind::collapse;
            rec.top = X.id(m.top);
            rec.k = m.k;
            rec.strict = is_strictly_admissible(X.poset(), X.flag(m.top), m.k);
            r.report.strict_moves += rec.strict;
            leg.moves.push_back(std::move(rec));
        }
        r.cert.legs.push_back(std::move(leg));
    }
    r.report.before = counts_by_stratum(X);
    r.report.after = counts_by_stratum(r.X);
    r.report.moves = static_cast<int>(run.moves.size());
    r.report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace strathom

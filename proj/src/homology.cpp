#include "strathom/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace strathom {

namespace {

using Row = std::vector<std::uint64_t>;

int leading(const Row& r) {
    for (int w = static_cast<int>(r.size()) - 1; w >= 0; --w)
        if (r[w]) return w * 64 + 63 - __builtin_clzll(r[w]);
    return -1;
}

int rank_z2(std::vector<Row> rows) {
    std::unordered_map<int, int> pivot;  // leading bit -> row
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        Row& r = rows[i];
        for (int lead = leading(r); lead >= 0; lead = leading(r)) {
            auto it = pivot.find(lead);
            if (it == pivot.end()) {
                pivot.emplace(lead, static_cast<int>(i));
                ++rank;
                break;
            }
            const Row& p = rows[it->second];
            for (size_t w = 0; w < r.size(); ++w) r[w] ^= p[w];
        }
    }
    return rank;
}

}  // namespace

std::vector<int> relative_betti_z2(const SSet& X, const std::vector<char>& keep, const std::vector<char>& drop) {
    const int top = X.dim();
    if (top < 0) return {};
    std::vector<std::vector<int>> cells(top + 1);
    std::vector<int> pos(X.size(), -1);
    for (int c = 0; c < X.size(); ++c)
        if (keep[c] && !drop[c]) {
            pos[c] = static_cast<int>(cells[X.dim(c)].size());
            cells[X.dim(c)].push_back(c);
        }
    // rank of the boundary out of dimension n
    std::vector<int> rk(top + 2, 0);
    for (int n = 1; n <= top; ++n) {
        const size_t words = (cells[n - 1].size() + 63) / 64;
        std::vector<Row> rows;
        for (int c : cells[n]) {
            Row r(words, 0);
            for (const auto& f : X.cell(c).faces)
                if (f.nondegenerate() && pos[f.cell] >= 0) r[pos[f.cell] / 64] ^= std::uint64_t(1) << (pos[f.cell] % 64);
            rows.push_back(std::move(r));
        }
        rk[n] = rank_z2(std::move(rows));
    }
    std::vector<int> b(top + 1);
    for (int n = 0; n <= top; ++n) b[n] = static_cast<int>(cells[n].size()) - rk[n] - rk[n + 1];
    return b;
}

std::vector<int> betti_z2(const SSet& X) {
    return relative_betti_z2(X, std::vector<char>(X.size(), 1), std::vector<char>(X.size(), 0));
}

StrataBetti strata_betti(const SSet& X) {
    const Poset& P = X.poset();
    StrataBetti r;
    const int len = std::max(0, X.dim() + 1);
    for (int p = 0; p < P.size(); ++p) {
        std::vector<char> le(X.size()), lt(X.size()), eq(X.size()), none(X.size(), 0);
        for (int c = 0; c < X.size(); ++c) {
            const DFlag J = X.flag(c);
            le[c] = P.leq(J.back(), p);
            lt[c] = P.less(J.back(), p);
            eq[c] = J.front() == p && J.back() == p;
        }
        auto rel = relative_betti_z2(X, le, lt);
        auto abs = relative_betti_z2(X, eq, none);
        rel.resize(len, 0);
        abs.resize(len, 0);
        r.relative.push_back(std::move(rel));
        r.absolute.push_back(std::move(abs));
    }
    return r;
}

int euler(const SSet& X) {
    int e = 0;
    for (int c = 0; c < X.size(); ++c) e += X.dim(c) % 2 ? -1 : 1;
    return e;
}

std::vector<int> strata_euler(const SSet& X) {
    std::vector<int> e(X.poset().size(), 0);
    for (int c = 0; c < X.size(); ++c) e[X.max_label(c)] += X.dim(c) % 2 ? -1 : 1;
    return e;
}

}  // namespace strathom

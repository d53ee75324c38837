#include "strathom/tda.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace strathom {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) out.push_back(trim(f));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

template <class T>
bool number(const std::string& s, T& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size() && !s.empty();
}

}  // namespace

LabeledPointCloud parse_points(std::istream& in, const std::string& source) {
    LabeledPointCloud cloud;
    std::string line;
    int lineno = 0;
    size_t columns = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::parse, source + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto f = split(line);
        if (!columns) {
            if (f.back() != "label") fail("missing label column (the last header field must be \"label\")");
            if (f.size() < 2) fail("no coordinate columns");
            columns = f.size();
            continue;
        }
        if (f.size() != columns)
            fail("expected " + std::to_string(columns) + " fields, found " + std::to_string(f.size()));
        std::vector<double> x(columns - 1);
        for (size_t i = 0; i + 1 < columns; ++i)
            if (!number(f[i], x[i]) || !std::isfinite(x[i])) fail("bad coordinate '" + f[i] + "'");
        int label = 0;
        if (!number(f.back(), label) || label < 0) fail("bad label '" + f.back() + "'");
        cloud.points.push_back(std::move(x));
        cloud.labels.push_back(label);
    }
    return cloud;
}

LabeledPointCloud load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
    return parse_points(in, path);
}

SSet vietoris_rips(const LabeledPointCloud& cloud, double epsilon, int max_dim, int threads) {
    int top = 1;
    for (int l : cloud.labels) top = std::max(top, l);
    return vietoris_rips(cloud, epsilon, max_dim, Poset::chain(top + 1), threads);
}

SSet vietoris_rips(const LabeledPointCloud& cloud, double epsilon, int max_dim, const Poset& P, int threads) {
    if (!(epsilon > 0)) throw Error(ErrorKind::parameter, "epsilon must be positive");
    if (max_dim < 0) throw Error(ErrorKind::parameter, "max_dim must be non-negative");
    const int n = static_cast<int>(cloud.points.size());
    if (static_cast<int>(cloud.labels.size()) != n) throw Error(ErrorKind::parameter, "one label per point");
    for (int i = 0; i < n; ++i) {
        if (cloud.points[i].size() != cloud.points[0].size())
            throw Error(ErrorKind::parameter, "point " + std::to_string(i) + " has inconsistent dimension");
        if (cloud.labels[i] < 0 || cloud.labels[i] >= P.size())
            throw Error(ErrorKind::poset, "label " + std::to_string(cloud.labels[i]) + " is not in the poset");
    }
    // label order must follow the poset: within a simplex, vertex labels must increase
    for (int a = 0; a < P.size(); ++a)
        for (int b = a + 1; b < P.size(); ++b)
            if (P.leq(b, a)) throw Error(ErrorKind::poset, "labels must be a linear extension of the poset");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cloud.labels[a] < cloud.labels[b]; });

    // adjacency in rank order; rows are independent
    std::vector<std::vector<int>> up(n);
    auto rows = [&](int from, int step) {
        for (int r = from; r < n; r += step) {
            const auto& x = cloud.points[order[r]];
            for (int s = r + 1; s < n; ++s) {
                const auto& y = cloud.points[order[s]];
                double d = 0;
                for (size_t i = 0; i < x.size(); ++i) d += (x[i] - y[i]) * (x[i] - y[i]);
                if (std::sqrt(d) <= epsilon && P.leq(cloud.labels[order[r]], cloud.labels[order[s]]))
                    up[r].push_back(s);
            }
        }
    };
    threads = std::clamp(threads, 1, std::max(1, n));
    if (threads == 1) {
        rows(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(rows, t, threads);
        for (auto& t : pool) t.join();
    }

    std::vector<std::vector<int>> simplices;
    std::vector<int> cur;
    auto extend = [&](auto&& self, const std::vector<int>& cand) -> void {
        simplices.push_back(cur);
        if (static_cast<int>(cur.size()) > max_dim) return;
        for (size_t i = 0; i < cand.size(); ++i) {
            const int v = cand[i];
            std::vector<int> next;
            std::set_intersection(cand.begin() + i + 1, cand.end(), up[v].begin(), up[v].end(), std::back_inserter(next));
            cur.push_back(v);
            self(self, next);
            cur.pop_back();
        }
    };
    for (int r = 0; r < n; ++r) {
        cur = {r};
        extend(extend, up[r]);
    }
    // rank -> original index
    for (auto& s : simplices)
        for (int& v : s) v = order[v];
    std::vector<std::string> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = "v" + std::to_string(i);
    return complex_from_simplices(P, ids, cloud.labels, simplices, ".");
}

}  // namespace strathom

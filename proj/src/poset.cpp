#include "strathom/poset.hpp"

#include "strathom/error.hpp"

#include <cctype>

namespace strathom {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::identifier: return "identifier";
    case ErrorKind::closure: return "closure";
    case ErrorKind::poset: return "poset";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::illegal_move: return "illegal-move";
    case ErrorKind::map: return "map";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::parse: return "parse";
    case ErrorKind::step: return "step";
    case ErrorKind::endpoint: return "endpoint";
    case ErrorKind::fullness: return "fullness";
    case ErrorKind::order: return "order";
    }
    return "unknown";
}

static bool looks_integral(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relation)
    : names_(std::move(elements)) {
    const int n = size();
    numeric_ = n > 0;
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw Error(ErrorKind::poset, "duplicate element '" + names_[i] + "'");
        numeric_ = numeric_ && looks_integral(names_[i]);
    }
    le_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) le_[i * n + i] = 1;
    for (const auto& [a, b] : relation) {
        int ia = id(a), ib = id(b);
        input_rel_.emplace_back(ia, ib);
        le_[ia * n + ib] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (le_[k * n + j]) le_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (le_[i * n + j] && le_[j * n + i])
                throw Error(ErrorKind::poset, "relation is not antisymmetric on '" + names_[i] + "', '" +
                                                  names_[j] + "'");
}

Poset Poset::chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return Poset(names, rel);
}

Poset Poset::antichain(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return Poset(names, {});
}

int Poset::id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::identifier, "unknown poset element '" + name + "'");
    return it->second;
}

bool is_dflag(const Poset& P, const std::vector<int>& seq) {
    for (int v : seq)
        if (v < 0 || v >= P.size()) throw Error(ErrorKind::identifier, "poset index out of range");
    for (size_t i = 1; i < seq.size(); ++i)
        if (!P.leq(seq[i - 1], seq[i])) return false;
    return true;
}

bool is_dflag(const Poset& P, const std::vector<std::string>& seq) {
    std::vector<int> ids;
    for (const auto& s : seq) ids.push_back(P.id(s));
    return is_dflag(P, ids);
}

Flag dflag_nondegenerate_core(const DFlag& d) {
    Flag out;
    for (int v : d)
        if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

std::vector<DFlag> all_dflags(const Poset& P, int length) {
    std::vector<DFlag> out;
    DFlag cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < P.size(); ++v) {
            if (!cur.empty() && !P.leq(cur.back(), v)) continue;
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace strathom

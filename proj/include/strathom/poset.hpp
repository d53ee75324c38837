#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace strathom {

// Finite poset. Elements are addressed by dense index; names are kept for I/O.
class Poset {
public:
    Poset() = default;
    // relation may be a covering relation; reflexive/transitive closure is taken here.
    Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& relation);

    static Poset chain(int n);       // 0 < 1 < ... < n-1, names "0".."n-1"
    static Poset antichain(int n);
    static Poset point() { return chain(1); }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int id(const std::string& name) const;  // throws identifier error
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    bool leq(int a, int b) const { return le_[a * size() + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool leq(const std::string& a, const std::string& b) const { return leq(id(a), id(b)); }

    // relation pairs exactly as supplied (for round-tripping)
    const std::vector<std::pair<int, int>>& input_relation() const { return input_rel_; }
    bool numeric_names() const { return numeric_; }
    void set_numeric_names(bool v) { numeric_ = v; }

    bool operator==(const Poset& o) const { return names_ == o.names_ && le_ == o.le_; }
    bool operator!=(const Poset& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<char> le_;
    std::vector<std::pair<int, int>> input_rel_;
    bool numeric_ = false;
};

using DFlag = std::vector<int>;  // element indices, weakly increasing
using Flag = std::vector<int>;   // strictly increasing

bool is_dflag(const Poset& P, const std::vector<int>& seq);
bool is_dflag(const Poset& P, const std::vector<std::string>& seq);
Flag dflag_nondegenerate_core(const DFlag& d);

// all d-flags of the given length (number of entries), in lexicographic index order
std::vector<DFlag> all_dflags(const Poset& P, int length);

}  // namespace strathom

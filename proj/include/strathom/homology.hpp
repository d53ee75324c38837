#pragma once

#include "strathom/sset.hpp"

#include <vector>

namespace strathom {

// Z/2 Betti numbers of the normalized chain complex, indexed by dimension 0..dim X.
std::vector<int> betti_z2(const SSet& X);
// Homology of (cells in keep) relative to (cells in drop); drop must be a subcomplex of keep.
std::vector<int> relative_betti_z2(const SSet& X, const std::vector<char>& keep, const std::vector<char>& drop);

// Per poset element p: H(X_{<=p}, X_{<p}) and H of the full subcomplex on p-labelled vertices.
struct StrataBetti {
    std::vector<std::vector<int>> relative, absolute;
    bool operator==(const StrataBetti&) const = default;
};
StrataBetti strata_betti(const SSet& X);

int euler(const SSet& X);
// Euler characteristic of each relative stratum (X_{<=p}, X_{<p}).
std::vector<int> strata_euler(const SSet& X);

}  // namespace strathom

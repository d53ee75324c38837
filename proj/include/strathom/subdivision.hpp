#pragma once

#include "strathom/sset.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace strathom {

using Mask = std::uint64_t;

// sd(X): cells are (x, S_0 < ... < S_k) with S_k the full vertex set of x. Masks are local to x.
// For sd_P the chain carries a label p_i per entry as well.
struct Subdivision {
    SSet S;
    struct Info {
        int x = -1;
        std::vector<Mask> chain;
        std::vector<int> p;  // sd_P only
    };
    std::vector<Info> info;
    std::map<std::pair<int, std::vector<Mask>>, int> by_chain;                     // sd
    std::map<std::tuple<int, std::vector<Mask>, std::vector<int>>, int> by_pchain;  // sd_P

    int lookup(int x, const std::vector<Mask>& chain) const;
    int lookup(int x, const std::vector<Mask>& chain, const std::vector<int>& p) const;
};

Subdivision sd(const SSet& X);
SMap lv(const SSet& X, const Subdivision& s);
// sd(f): sd(X) -> sd(Y)
SMap sd_map(const SSet& X, const Subdivision& sX, const SSet& Y, const Subdivision& sY, const SMap& f);

Subdivision sd_p(const SSet& X);
SMap lv_p(const SSet& X, const Subdivision& s);

// Composite of n last-vertex maps sd^n(X) -> X; levels[i] = sd^i(X) for i = 1..n.
SMap lv_iterated(const SSet& X, const std::vector<Subdivision>& levels);

// ---- ordered complexes ----

// Simplices of an FOS complex keyed by their sorted vertex cells.
std::map<std::vector<int>, int> simplex_index(const SSet& K);
// Map into an FOS complex given on vertices. Throws map error when some image is not a simplex
// in the right order.
SMap map_from_vertices(const SSet& X, const SSet& K, const std::vector<int>& vertex_image);

struct RelSubdivision {
    SSet S;     // sd(K rel A)
    SMap l0;    // sd(K) -> S
    SMap l1;    // S -> K
    Subdivision sdK;
    std::vector<std::vector<int>> carrier;  // per vertex of S: vertex cells of K it spans
};

// A given as a mask over the cells of K.
RelSubdivision sd_rel(const SSet& K, const std::vector<char>& A);

struct FamilySubdivision {
    SSet S;      // sd^A(K)
    SMap l0;     // sd^n(K) -> S
    SMap l1;     // S -> K
    std::vector<Subdivision> levels;  // sd^i(K), i = 1..n
    std::vector<std::vector<int>> carrier;
};
FamilySubdivision sd_family(const SSet& K, const std::vector<std::vector<char>>& family);

std::string mask_string(Mask m);

}  // namespace strathom

#pragma once

#include "strathom/sset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strathom {

struct HornSpec {
    DFlag dflag;
    int k = 0;
};

bool is_admissible(const DFlag& J, int k);
bool is_strictly_admissible(const Poset& P, const DFlag& J, int k);
inline bool is_admissible(const HornSpec& h) { return is_admissible(h.dflag, h.k); }
inline bool is_strictly_admissible(const Poset& P, const HornSpec& h) {
    return is_strictly_admissible(P, h.dflag, h.k);
}

struct FreePair {
    int top = -1;   // sigma
    int face = -1;  // tau = d_k sigma
    int k = -1;
    bool operator==(const FreePair& o) const { return top == o.top && face == o.face && k == o.k; }
};

// Why (sigma, tau, k) is not a legal collapse; empty when it is.
std::string collapse_obstruction(const SSet& X, const std::vector<std::vector<int>>& cofaces, int top, int k,
                                 const std::vector<char>* protect, bool strict_only);

// Ordered by descending dimension, then cell id, then k.
std::vector<FreePair> find_free_pairs(const SSet& X, const std::vector<char>& protect, bool strict_only);

// A simplex named by cell id, so that it survives re-indexing.
struct IdSimplex {
    Word word;  // degeneracy indices, decreasing
    std::string cell;
    bool operator==(const IdSimplex&) const = default;
};
std::vector<IdSimplex> to_ids(const SSet& Y, const SMap& f);
// Throws identifier error on unknown ids. dims gives the source dimension of each entry.
SMap from_ids(const SSet& Y, const std::vector<IdSimplex>& f, const std::vector<int>& dims);

struct MoveRecord {
    enum class Kind { expand, collapse } kind = Kind::collapse;
    std::string top;  // id of sigma (added or removed)
    int k = 0;
    // expand only
    DFlag dflag;
    std::vector<IdSimplex> attach;  // horn -> pre-state, indexed by the horn's cells
    std::string face;  // id of the new free face

    bool strict = false;  // filled in by replay
};

// Horn of the simplex on J, as a subset of simplex_set(P, J).
SSet horn(const Poset& P, const HornSpec& h);

std::pair<SSet, MoveRecord> collapse(const SSet& X, int top, int face, int k);
// new_top / new_face default to fresh "x<n>" names
std::pair<SSet, MoveRecord> expand(const SSet& X, const HornSpec& h, const SMap& attach,
                                   const std::string& new_top = "", const std::string& new_face = "");

// Apply a record to X. Throws illegal-move on failure; sets rec.strict.
SSet apply_move(const SSet& X, MoveRecord& rec);

}  // namespace strathom

#pragma once

#include "strathom/sset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace strathom {

// Pairing on A -> B, stored over the cells of B. Cells with base[c] set form A.
struct Pairing {
    std::vector<char> base;
    std::vector<int> T;  // typeII cell -> its typeI partner, -1 elsewhere
    std::vector<int> k;  // typeII cell -> face index, -1 elsewhere

    Pairing() = default;
    explicit Pairing(int n) : base(n, 0), T(n, -1), k(n, -1) {}
    int size() const { return static_cast<int>(base.size()); }
    bool type2(int c) const { return T[c] >= 0; }
    int count() const;  // number of typeII cells
    void pair(int sigma, int tau, int kk) {
        T[sigma] = tau;
        k[sigma] = kk;
    }
};

// A cofibration together with its certificate.
struct Certified {
    SSet A, B;
    SMap incl;  // A -> B
    Pairing pairing;
};

std::vector<Diagnostic> check_proper(const SSet& B, const Pairing& p);

struct Regularity {
    bool regular = false;
    std::vector<int> phi;    // per B cell, defined on typeII cells
    std::vector<int> cycle;  // typeII cells forming a cycle when not regular
};
// Requires a proper pairing (precondition error otherwise).
Regularity check_regular(const SSet& B, const Pairing& p);

// Steps are (top cell of B, k): top is added together with its face d_k.
struct Presentation {
    std::vector<char> base;
    std::vector<std::pair<int, int>> steps;
};

Presentation pairing_to_presentation(const SSet& B, const Pairing& p);
// Empty when every step is a legal admissible horn filling and the replay ends at B.
std::vector<Diagnostic> replay(const SSet& B, const Presentation& a, std::vector<char>* strict_steps = nullptr);
Pairing presentation_to_pairing(const SSet& B, const Presentation& a);

struct Restriction {
    std::vector<char> mid;  // B' as a subset of B
    Pairing first;          // A -> B', over B'
    Pairing second;         // B' -> B, over B
    SSet Bmid;
};
Restriction restrict_finite(const SSet& B, const Pairing& p, const std::vector<char>& C);

// convenience: proper + regular + presentation replays
bool certificate_ok(const SSet& B, const Pairing& p, std::string* why = nullptr);

// ---- canonical pairings ----

// Face of Delta^J' skipping vertex k, where J'[k] repeats a neighbouring entry: a section of the
// degeneracy collapsing the two.
Certified degeneracy_section(const Poset& P, const DFlag& Jprime, int k);
Certified sd_section(const Poset& P, const DFlag& J);
Certified sdp_section(const Poset& P, const DFlag& J);  // J nondegenerate
// (Lambda^J_k (x) Delta^n) u (Delta^J (x) dDelta^n) -> Delta^J (x) Delta^n
Certified pushout_product(const Poset& P, const DFlag& J, int k, int n);
// True when p_{k-1} = p_k = p_{k+1}, so both grid cases apply; pushout_product then uses p_k = p_{k+1}.
bool pushout_product_ambiguous(const DFlag& J, int k);

// Grid rule on a walk of points (h, o) with h in [m] the horn coordinate. The walk must be relative:
// its h-values cover [m] minus at most k. first_case selects removal of the last point of column k
// (p_k = p_{k+1}); otherwise the first point of column k is used (p_k = p_{k-1}).
// Returns true for typeII, filling the partner walk and the inserted index; false for typeI, filling
// the typeII partner and the removed index.
bool grid_rule(const std::vector<std::pair<int, int>>& walk, int k, bool first_case,
               std::vector<std::pair<int, int>>& partner, int& index);

}  // namespace strathom

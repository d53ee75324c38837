#pragma once

#include "strathom/moves.hpp"
#include "strathom/pairing.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strathom {

// One arrow of a zigzag. A presentation leg is the inclusion base -> B; forward means the left
// object is the base. A moves leg turns the left object into the right one (forward) or the right
// object into the left one (backward).
struct Leg {
    enum class Dir { forward, backward } dir = Dir::forward;
    enum class Kind { presentation, moves } kind = Kind::moves;
    SSet B;
    Presentation pres;
    // endpoint cell id -> B cell id, for a base whose ids differ from the endpoint's
    std::map<std::string, std::string> incl;
    std::vector<MoveRecord> moves;
};

struct Deformation {
    std::optional<SSet> from, to;
    std::vector<Leg> legs;
};

// Empty when every leg replays and neighbouring objects agree (by id, through incl, or up to
// isomorphism). strict receives, per leg, which steps are strictly admissible.
std::vector<Diagnostic> verify(const Deformation& d, std::vector<std::vector<char>>* strict = nullptr);
Deformation invert(const Deformation& d);
// Throws endpoint error when d1.to and d2.from differ.
Deformation concat(const Deformation& d1, const Deformation& d2);

struct ReduceStrategy {
    bool strict_only = false;
    bool descending = true;  // dimension order of the scan
    long max_rounds = -1;    // cap on collapses; negative means none
    std::vector<std::string> protect;
};

struct CollapseRun {
    std::vector<char> keep;
    std::vector<FreePair> moves;  // in the cell indices of the input
};

// Greedy collapsing: always takes the least legal pair in (dimension, id, k) order.
CollapseRun collapse_greedy(const SSet& X, const std::vector<char>& protect, bool strict_only, bool descending,
                            long max_moves = -1);

struct ReduceReport {
    // dimension -> stratum -> count
    std::vector<std::vector<int>> before, after;
    int moves = 0;
    int strict_moves = 0;
    double wall_ms = 0;
};

struct ReduceResult {
    SSet X;
    Deformation cert;
    ReduceReport report;
};

ReduceResult reduce(const SSet& X, const ReduceStrategy& s = {});

std::vector<std::vector<int>> counts_by_stratum(const SSet& X);

}  // namespace strathom

#pragma once

#include "strathom/pairing.hpp"
#include "strathom/reduce.hpp"
#include "strathom/subdivision.hpp"

namespace strathom {

bool is_nonsingular(const SSet& X);
bool is_fos(const SSet& X);

// Join cylinder of a map of FOS complexes f : K -> K'. Target vertices come first in every simplex.
struct Mcx {
    SSet M;
    Subdivision sdK, sdKp;
    SMap from_target;  // sd(K') -> M
    SMap from_source;  // sd(K) -> M
    SMap retraction;   // M -> sd(K')
    Pairing pairing;   // sd(K') -> M
};
Mcx mcx(const SSet& K, const SSet& Kp, const SMap& f);

struct FosResult {
    SSet K;
    Deformation cert;
    int subdivisions = 0;
};

// Subdivides until the result is FOS. Each round contributes the lv mapping cylinder: a forward
// leg X -> M_lv and a backward leg M_lv <- sd(X), the latter found by collapsing onto sd(X).
FosResult to_fos(const SSet& X, int max_rounds = 4);

}  // namespace strathom

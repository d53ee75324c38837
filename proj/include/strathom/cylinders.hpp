#pragma once

#include "strathom/pairing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strathom {

// M_f = Y u_f (X (x) D1), glued along the 0-end. X sits in M_f at the 1-end.
struct CylinderBundle {
    SSet M;
    SMap i_src;  // X -> M
    SMap i_tgt;  // Y -> M
    SMap proj;   // M -> Y
    Product prod;                // X (x) D1
    SMap from_prod;              // prod -> M
    std::vector<int> prod_cell;  // M cell -> prod cell, -1 for cells of Y
};

CylinderBundle mapping_cylinder(const SSet& X, const SSet& Y, const SMap& f);

// Moves a pairing across a map that is injective on its relative cells.
Pairing transport(const Pairing& p, const std::vector<int>& cell_map, int target_size);

// X (x) D1 -> X
SMap product_projection(const Product& prod);

// Pairing of X (x) {end} -> X (x) D1 (grid rule on the D1 coordinate).
Pairing end_pairing(const Product& prod, int end);
// Pairing of B (x) dD1 u A (x) D1 -> B (x) D1 built from a pairing of A -> B.
Pairing product_rel_pairing(const SSet& B, const Pairing& p, const Product& prod);

enum class CylFsae { i0, i1, tgt_into_cyl, rel_horn_quotient, subcyl };
std::optional<CylFsae> cyl_fsae_from_string(const std::string& s);

struct CylinderData {
    SSet X, Y;
    SMap f;                   // X -> Y; ignored by i0 / i1
    std::vector<char> sub;    // subcyl: B' as a subset of X
    Pairing pairing;          // rel_horn_quotient: pairing of A -> X over the cells of X
};

// The named inclusion as a certified cofibration. i0/i1 target X (x) D1, the rest target M_f.
Certified cylinder_fsae(CylFsae which, const CylinderData& d);

struct MHat {
    SSet M;  // M^_H
    CylinderBundle MH, Mf, Mg;
    Certified sf, sg;  // M_{H_0} -> M^_H and M_{H_1} -> M^_H
    SMap quotient;     // M_H -> M^_H
};

// H : X (x) D1 -> Z, given on the cells of outer_product(X, D1).
MHat mhat(const SSet& X, const SSet& Z, const SMap& H);

struct Arrow {
    std::string name, from, to;
    SMap map;
    std::optional<Pairing> pairing;
};

struct HomotopySquare {
    SSet Cyl;  // Y (x) D1, as M_id
    MHat hat;
    SSet Rf, Rg, R;
    std::vector<Arrow> arrows;
    SMap via_f, via_g;  // Y -> R along either side
    bool commutes = false;  // via_f o f == via_g o g cellwise
};

HomotopySquare homotopy_square(const SSet& X, const SSet& Y, const SMap& f, const SMap& g, const SMap& H);

struct TorsionSum {
    SSet W;
    SMap diagonal;  // X -> W
    SMap from_Y, from_Z;
};
TorsionSum torsion_sum(const SSet& X, const SSet& Y, const SMap& a, const SSet& Z, const SMap& b);

// The base of p is exactly the image of incl.
bool base_matches(const SMap& incl, const Pairing& p);

}  // namespace strathom

#pragma once

#include <string>

#include "swk/core.hpp"

namespace swk {

// A 3x3 subtraction grid extending a cartesian square of cofibrations
//
//     W  >->  X  <-  X-W        row i:  obj[i][0] >-> obj[i][1] <- obj[i][2]
//     v       v       v         col j:  obj[0][j] >-> obj[1][j] <- obj[2][j]
//    Z  >->  Y  <-  Y-Z
//     ^       ^       ^
//    Z-W >-> Y-X <-  corner
//
// Every row and column is a subtraction sequence and the bottom-right
// square is cartesian.  `report` collects any failures found while the
// grid was assembled; objects/morphisms that could not be produced are
// kNoObj / kNoMor.
struct SubtractionGrid {
    ObjId obj[3][3] = {{kNoObj, kNoObj, kNoObj},
                       {kNoObj, kNoObj, kNoObj},
                       {kNoObj, kNoObj, kNoObj}};
    MorId row_cof[3] = {kNoMor, kNoMor, kNoMor};
    MorId row_leg[3] = {kNoMor, kNoMor, kNoMor};
    MorId col_cof[3] = {kNoMor, kNoMor, kNoMor};
    MorId col_leg[3] = {kNoMor, kNoMor, kNoMor};
    CheckReport report;
};

// Extend the cartesian square of cofibrations
//   w2x: W >-> X,  w2z: W >-> Z,  x2y: X >-> Y,  z2y: Z >-> Y
// (with x2y . w2x == z2y . w2z) to the full 3x3 grid.  Throws
// StructuralError if the input square is not of the required shape.
SubtractionGrid extend_to_grid(SwCategory& c, MorId w2x, MorId w2z, MorId x2y,
                               MorId z2y);

// Axiom checkers.  `bound` caps object sizes; every configuration drawn
// from objects within the bound is examined.  Cofibration-subobject and
// fibration legs range over the instance's canonical representatives
// (axiom statements are invariant under replacing a leg by an isomorphic
// one, and representatives are exhaustive for tabulated instances).
CheckReport check_subtraction_axioms(SwCategory& c, int bound);
CheckReport check_subtractive_axioms(SwCategory& c, int bound);
CheckReport check_sw_axioms(SwCategory& c, int bound);

// Short human-readable identifier "label(src)->label(dst)#id".
std::string mor_desc(const SwCategory& c, MorId f);

}  // namespace swk

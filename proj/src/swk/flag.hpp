#pragma once

#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"

namespace swk {

// A degree-n flag: the data of a functor on pairs 0 <= i <= j <= n with
//   X_{i,i} = initial,   rows X_{i,j} >-> X_{i,k},
//   every triple X_{i,j} >-> X_{i,k} <- X_{j,k} a subtraction sequence,
//   and all comparison squares cartesian.
// Stored via its adjacent generators:
//   h[i][j] : X_{i,j}   -> X_{i,j+1}   (horizontal cofibration, i<=j<n)
//   v[i][j] : X_{i+1,j} -> X_{i,j}     (complement leg, i<j<=n)
// Unused slots hold kNoObj / kNoMor.
struct Flag {
    int n = -1;
    std::vector<std::vector<ObjId>> obj;  // obj[i][j], i<=j
    std::vector<std::vector<MorId>> h;
    std::vector<std::vector<MorId>> v;

    bool operator==(const Flag& o) const {
        return n == o.n && obj == o.obj && h == o.h && v == o.v;
    }
};

// Composite X_{i,j} -> X_{i,k} (j <= k) and leg X_{j,k} -> X_{i,k} (i <= j).
MorId flag_row_mor(SwCategory& c, const Flag& f, int i, int j, int k);
MorId flag_leg_mor(SwCategory& c, const Flag& f, int i, int j, int k);

// Full validation of the flag conditions.
CheckReport validate_flag(SwCategory& c, const Flag& f);

// Simplicial structure: face d_k (0 <= k <= n) and degeneracy s_k.
Flag face(SwCategory& c, const Flag& f, int k);
Flag degeneracy(SwCategory& c, const Flag& f, int k);

// Canonical inclusion-based flag from its top row of nested objects
// (tops[0] must be the initial object).
Flag flag_from_top_row(ConcreteSetInstance& c, const std::vector<ObjId>& tops);

// All inclusion-based flags of the given degree, enumerated as ascending
// chains of objects starting at the initial object.
std::vector<Flag> enumerate_flags(ConcreteSetInstance& c, int degree);

// A degree-(m,n) biflag: a flag of flags.  Slots are indexed by a pair of
// arrow indices; generators run in both directions.
struct BiFlag {
    int m = -1, n = -1;
    // obj[i][j][k][l] for i<=j<=m, k<=l<=n
    std::vector<std::vector<std::vector<std::vector<ObjId>>>> obj;
    std::vector<std::vector<std::vector<std::vector<MorId>>>> hA, vA, hB, vB;
};

// Pointwise-intersection biflag from two chains in the same instance.
BiFlag biflag_from_chains(ConcreteSetInstance& c,
                          const std::vector<ObjId>& topsA,
                          const std::vector<ObjId>& topsB);

// The four iterated-flag conditions: diagonal basepoints, flag slices in
// both directions, and cartesian mixed squares.
CheckReport validate_biflag(SwCategory& c, const BiFlag& bf);

}  // namespace swk

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"
#include "swk/f1plus.hpp"
#include "swk/flag.hpp"

namespace swk {

// An element of the mixing construction for the bundled functor
// (s, q): pairs -> base x base.  The pair flag has degree m; the two base
// flags have degree m+n+1 and agree with the s- / complement-projections
// of the pair flag on the shared columns 0..m; the extra columns are the
// tails S_0..S_n and T_0..T_n.
struct AddElement {
    int m = -1, n = -1;
    Flag f1;  // flag of pairs, degree m
    Flag s;   // Z-level flag, degree m+n+1
    Flag t;   // complement-level flag, degree m+n+1

    bool operator==(const AddElement& o) const = default;
};

// Flag validity of all three parts plus the arrow-by-arrow compatibility
// of the shared columns.
CheckReport validate_add_element(F1PlusInstance& fp, const AddElement& e);

// Canonical flag of pairs generated by an ascending chain of pairs under
// literal inclusions.  The chain must start at the initial pair and be
// cartesian: X_j meet Z_{j+1} = Z_j.
Flag f1_flag_from_chain(F1PlusInstance& fp, const std::vector<ObjId>& chain);

// Element assembled from a cartesian pair chain (X_0,Z_0)..(X_m,Z_m) with
// (X_0,Z_0) initial, an S-tail S_0..S_n with Z_m <= S_0, and a T-tail
// T_0..T_n with X_m - Z_m <= T_0.
AddElement add_element_from_chains(F1PlusInstance& fp,
                                   const std::vector<ObjId>& pair_chain,
                                   const std::vector<ObjId>& s_tail,
                                   const std::vector<ObjId>& t_tail);

// Simplicial structure in the shared direction: d_k / s_k act on the
// first m+1 columns of all three flags at once (0 <= k <= m).
AddElement add_face(F1PlusInstance& fp, const AddElement& e, int k);
AddElement add_degeneracy(F1PlusInstance& fp, const AddElement& e, int k);

// The degree-n flag obtained from a degree-(m+n+1) flag by subtracting
// the first post-m object from each later one (canonical subtraction).
Flag rho_flag(ConcreteSetInstance& c, const Flag& f, int m);

// rho on an element: both tail flags at once.
std::pair<Flag, Flag> rho(F1PlusInstance& fp, const AddElement& e);

// The section of rho at level m: pads a pair of degree-n flags with m+1
// initial columns (and the all-initial pair flag).
AddElement insert_flags(F1PlusInstance& fp, const Flag& sflag,
                        const Flag& tflag, int m);

// The retraction: zeroes the Z-level, keeps the complement level, and
// replaces the S-tail by its subtracted form.
AddElement gamma(F1PlusInstance& fp, const AddElement& e);

// insert_flags(rho(e)) at e's own level.
AddElement e_n(F1PlusInstance& fp, const AddElement& e);

// The explicit homotopy between gamma and the identity, 0 <= i <= m.
// Requires the base instance to provide the canonical pushouts
// C_{k,l} u_{A_{k,l}} (S_0 - A_k); missing ones raise StructuralError
// naming the span.
AddElement homotopy_h(F1PlusInstance& fp, int i, const AddElement& e);

struct HomotopyReport {
    long long elements_checked = 0;
    long long identities_checked = 0;
    long long strict = 0;     // certified by strict equality of choices
    long long up_to_iso = 0;  // certified only by canonical-label match
    CheckReport report;
};

// The full simplicial-homotopy identity table over a corpus, including
// validity of every h_i output.
HomotopyReport verify_homotopy(F1PlusInstance& fp,
                               const std::vector<AddElement>& corpus);

// All elements of bidegree (m, n) whose base objects are subsets of the
// first `universe` atoms.  The base instance must have at least
// 2*universe atoms so that every canonical pushout used by the homotopy
// exists.
std::vector<AddElement> enumerate_add_elements(F1PlusInstance& fp, int m,
                                               int n, int universe);

// Seeded random elements with m <= max_m, n <= max_n over the first
// `universe` atoms (same headroom requirement).
std::vector<AddElement> random_add_elements(F1PlusInstance& fp, int universe,
                                            int count, unsigned seed,
                                            int max_m, int max_n);

// The worked 5-simplex example (m = 5, n = 0) over a 6-atom base:
// A_j = first j of the atoms 0..4, C_j = A_j plus atom 5 for j >= 1,
// S_0 = atoms 0..4, T_0 = atom 5.
AddElement appendix_element(F1PlusInstance& fp);

// Stable JSON rendering of the h_3 slot grids of the 5-simplex example.
std::string appendix_h3_json(F1PlusInstance& fp);

}  // namespace swk

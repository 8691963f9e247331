#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"
#include "swk/f1plus.hpp"
#include "swk/snf.hpp"

namespace swk {

// Isomorphism classes of the objects within a size bound, keyed by the
// instance's canonical labels.  Class 0 is always the initial object.
struct IsoClasses {
    std::vector<std::string> labels;  // canonical label per class
    std::vector<ObjId> reps;          // one representative per class
    std::map<std::string, int> index;

    int class_of(SwCategory& c, ObjId x) const;
};

IsoClasses iso_classes(SwCategory& c, size_t bound);

// Presentation of K_0: one generator per iso class, one relation
//   [X] - [Z] - [X \ Z] = 0
// per class of subtraction sequences (plus [initial] = 0).
struct Presentation {
    IsoClasses classes;
    Matrix relations;                    // rows over the generators
    std::vector<std::string> relation_desc;
};

Presentation k0_presentation(SwCategory& c, size_t bound);

// The group Z^g / rows, computed by Smith normal form.  class_of reduces a
// generator vector to canonical coordinates: torsion coordinates mod their
// invariant, free coordinates exact, killed coordinates dropped.
struct K0Group {
    Presentation pres;
    SnfResult snf;
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1

    // canonical coordinates: torsion entries first, then free entries
    std::vector<Int> reduce(const std::vector<Int>& gen_vector) const;
    std::vector<Int> class_of_object(SwCategory& c, ObjId x) const;
    bool is_zero(const std::vector<Int>& gen_vector) const;
};

K0Group k0_group(SwCategory& c, size_t bound);

// Ring structure on K_0 of a concrete instance: [X] * [Y] = [X x Y].
// Returns nullopt when the product leaves the tabulated window.
std::optional<std::vector<Int>> k0_ring_product(ConcreteSetInstance& c,
                                                const K0Group& g, ObjId x,
                                                ObjId y, size_t bound);

// Additivity on pi_0: the map K_0(F_1^+ C) -> K_0(C) x K_0(C) sending a
// pair (Z <= X) to ([Z], [X \ Z]).  Verifies that it is well defined on the
// presentations, surjective, and an isomorphism.
struct AdditivityK0Report {
    bool well_defined = false;
    bool surjective = false;
    bool isomorphism = false;
    std::string detail;
    bool ok() const { return well_defined && surjective && isomorphism; }
};

AdditivityK0Report additivity_on_k0(F1PlusInstance& f1, size_t bound);

}  // namespace swk

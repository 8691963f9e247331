#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "swk/core.hpp"

namespace swk {

using Mask = uint64_t;

// Finite group given by its multiplication table; element 0 is the identity.
struct GroupTable {
    int order = 1;
    std::vector<std::vector<int>> mult;  // mult[g][h] = g*h

    static GroupTable trivial();
    static GroupTable cyclic(int n);
    void validate() const;  // throws StructuralError
    int inverse(int g) const;
};

// SW-instance whose objects are subsets of a fixed atom universe (<= 64
// atoms) and whose morphisms are functions between them.  Covers finite
// sets, finite G-sets (objects/maps restricted to stable/equivariant), and
// the tabulated window of constructible sets (atoms = field points).
//
// Cofibrations = fibrations = injections; subtraction = literal complement
// with its inclusion leg; pushouts glue along fresh atoms deterministically.
class ConcreteSetInstance final : public SwCategory {
public:
    enum class WeqPolicy { Isos, EqualSize };

    // Plain finite sets: all subsets of `universe_size` atoms up to
    // `size_cap` (default: the whole universe).
    static ConcreteSetInstance finset(int universe_size, int size_cap = -1);
    // G-sets with at most `max_elements` elements, universe stocked with
    // enough copies of every orbit type.
    static ConcreteSetInstance gset(const GroupTable& g, int max_elements);
    // Atom universe = points of F_p^nvars in lexicographic order.
    static ConcreteSetInstance varieties_window(int prime, int nvars,
                                                int size_cap = -1);

    ConcreteSetInstance(std::vector<std::string> atom_names,
                        const GroupTable* group,
                        std::vector<std::vector<int>> action, int size_cap,
                        WeqPolicy weq = WeqPolicy::Isos);

    void set_weq_policy(WeqPolicy w) { weq_ = w; }

    // --- SwCategory contract -------------------------------------------
    int object_count() const override { return (int)objects_.size(); }
    int object_size(ObjId x) const override;
    std::string object_label(ObjId x) const override;
    std::string canonical_label(ObjId x) const override;
    ObjId initial_object() const override { return obj_of_mask(0); }

    ObjId mor_src(MorId f) const override;
    ObjId mor_dst(MorId f) const override;
    MorId identity(ObjId x) override;
    MorId compose(MorId f, MorId g) override;
    std::vector<MorId> hom(ObjId a, ObjId b) override;

    bool is_cof(MorId f) const override { return injective(f); }
    bool is_fib(MorId f) const override { return injective(f); }
    bool is_weq(MorId f) const override;
    bool is_iso(MorId f) const override;

    std::vector<MorId> cof_subobject_reps(ObjId x) override;
    std::vector<MorId> fib_into_reps(ObjId x) override {
        return cof_subobject_reps(x);  // fibrations = cofibrations here
    }
    std::optional<SubtractionTriple> subtraction(MorId cof) override;
    bool is_subtraction_triple(MorId cof, MorId leg) override;
    std::optional<PushoutResult> pushout(MorId c1, MorId c2) override;
    std::optional<MorId> pushout_mediator(MorId c1, MorId c2,
                                          const PushoutResult& p, MorId f,
                                          MorId g) override;
    std::optional<PullbackResult> pullback(MorId f, MorId g) override;
    bool is_cartesian(MorId p, MorId q, MorId f, MorId g) override;
    bool is_cocartesian(MorId c1, MorId c2, MorId l1, MorId l2) override;

    // --- mask / atom access --------------------------------------------
    int universe_size() const { return (int)atom_names_.size(); }
    const std::string& atom_name(int a) const { return atom_names_[a]; }
    Mask mask_of(ObjId x) const { return objects_[x]; }
    const std::vector<int>& atoms_of(ObjId x) const { return atoms_[x]; }
    ObjId obj_of_mask(Mask m) const;     // kNoObj if not an object
    ObjId require_object(Mask m) const;  // throws if not an object

    // Intern a morphism by its atom-index map (map[i] = index into the
    // destination's atom list of the image of source atom #i).
    MorId mor(ObjId src, ObjId dst, const std::vector<uint8_t>& map);
    const std::vector<uint8_t>& map_of(MorId f) const;
    // Atom-level application and image.
    int apply_atom(MorId f, int atom) const;
    Mask image_mask(MorId f) const;
    bool injective(MorId f) const;
    MorId inclusion(ObjId sub, ObjId sup);
    // Restriction of f: X -> Y to masks sub_src ⊆ X, sub_dst ⊆ Y (the
    // image of sub_src must land in sub_dst).
    MorId restrict(MorId f, Mask sub_src, Mask sub_dst);

    // --- biexact product (finset / varieties only) ----------------------
    // Product object = the first |a|*|b| universe atoms; pair (p-th atom
    // of a, r-th of b) sits at rank p*|b|+r.  Unavailable for G-sets.
    std::optional<ObjId> product_object(ObjId a, ObjId b);
    std::optional<MorId> product_mor(MorId f, MorId g);

    bool has_group() const { return group_ != nullptr; }
    const GroupTable* group() const { return group_; }
    int act(int g, int atom) const { return action_[g][atom]; }
    int size_cap() const { return size_cap_; }

private:
    struct Mor {
        ObjId src, dst;
        std::vector<uint8_t> map;
    };

    bool mask_admissible(Mask m) const;
    bool mask_stable(Mask m) const;
    bool map_equivariant(ObjId src, ObjId dst,
                         const std::vector<uint8_t>& map) const;
    int atom_rank(ObjId x, int atom) const;  // index of atom in atoms_[x]
    void compute_orbit_types();

    std::vector<std::string> atom_names_;
    const GroupTable* group_ = nullptr;        // not owned
    std::vector<std::vector<int>> action_;     // action_[g][atom]
    int size_cap_ = 0;
    WeqPolicy weq_ = WeqPolicy::Isos;

    std::vector<Mask> objects_;            // sorted by (popcount, mask)
    std::vector<std::vector<int>> atoms_;  // ascending atom lists
    std::unordered_map<Mask, ObjId> mask_to_obj_;

    std::vector<Mor> mors_;
    std::map<std::tuple<ObjId, ObjId, std::vector<uint8_t>>, MorId> mor_ids_;
    std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_cache_;

    // G-set bookkeeping: orbit id per atom, equivariant-iso type per orbit.
    std::vector<int> atom_orbit_;
    std::vector<std::vector<int>> orbit_atoms_;
    std::vector<int> orbit_type_;
};

// Owned group tables used by factory functions live here so instances can
// keep a stable pointer.
const GroupTable& intern_group(const GroupTable& g);

}  // namespace swk

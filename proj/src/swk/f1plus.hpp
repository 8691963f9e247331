#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"

namespace swk {

// The category of subtraction sequences over a concrete base instance.
// Objects are pairs Z <= X of base objects, standing for the sequence
// Z >-> X <- X-Z.  A morphism (Z <= X) -> (Z' <= X') is a base map
// m: X -> X' with m^{-1}(Z') = Z; that makes both the Z-square and the
// complement square cartesian, which is the defining condition.
//
// Structure is levelwise: cofibrations/fibrations are base injections,
// weak equivalences are maps that are base weak equivalences on all three
// levels, subtraction and (co)limits are computed level by level.
class F1PlusInstance final : public SwCategory {
public:
    explicit F1PlusInstance(ConcreteSetInstance& base);

    // --- SwCategory ------------------------------------------------------
    int object_count() const override { return (int)pairs_.size(); }
    int object_size(ObjId x) const override;
    std::string object_label(ObjId x) const override;
    std::string canonical_label(ObjId x) const override;
    ObjId initial_object() const override { return initial_; }

    ObjId mor_src(MorId f) const override { return mors_.at(f).src; }
    ObjId mor_dst(MorId f) const override { return mors_.at(f).dst; }
    MorId identity(ObjId x) override;
    MorId compose(MorId f, MorId g) override;
    std::vector<MorId> hom(ObjId a, ObjId b) override;

    bool is_cof(MorId f) const override;
    bool is_fib(MorId f) const override;
    bool is_weq(MorId f) const override;
    bool is_iso(MorId f) const override;

    std::vector<MorId> cof_subobject_reps(ObjId x) override;
    std::vector<MorId> fib_into_reps(ObjId x) override {
        return cof_subobject_reps(x);
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

    // --- pair access and the three exact projections ---------------------
    ConcreteSetInstance& base() { return base_; }
    ObjId obj_of_pair(ObjId base_x, ObjId base_z) const;
    std::pair<ObjId, ObjId> pair_of(ObjId x) const {  // (X, Z)
        return pairs_.at(x);
    }

    ObjId s_obj(ObjId x) const { return pairs_.at(x).second; }  // Z
    ObjId t_obj(ObjId x) const { return pairs_.at(x).first; }   // X
    ObjId q_obj(ObjId x) const;                                 // X - Z
    MorId base_mor(MorId f) const { return mors_.at(f).base; }
    // Intern the pair morphism carried by a base map, validating the
    // preimage condition m^{-1}(Z') = Z; throws on an invalid carrier.
    MorId mor_from_base(ObjId src, ObjId dst, MorId base_f);
    MorId s_mor(MorId f);  // restriction to the Z level
    MorId t_mor(MorId f) { return mors_.at(f).base; }
    MorId q_mor(MorId f);  // restriction to the complement level

private:
    struct Mor {
        ObjId src, dst;
        MorId base;
    };

    Mask x_mask(ObjId x) const { return base_.mask_of(pairs_[x].first); }
    Mask z_mask(ObjId x) const { return base_.mask_of(pairs_[x].second); }
    Mask y_mask(ObjId x) const { return x_mask(x) & ~z_mask(x); }
    // m^{-1}(Z_dst) == Z_src for the base map m between the pairs' tops?
    bool preimage_ok(MorId base_f, ObjId src, ObjId dst) const;
    MorId intern(ObjId src, ObjId dst, MorId base_f);
    std::optional<MorId> intern_checked(ObjId src, ObjId dst, MorId base_f);
    // Image of the part of src(f) covered by `sub` under the base map f.
    Mask mask_image(MorId base_f, Mask sub) const;
    // Restrictions of f to the Z / complement levels, as base morphisms.
    MorId z_restriction(MorId f) const;
    MorId y_restriction(MorId f) const;

    ConcreteSetInstance& base_;
    std::vector<std::pair<ObjId, ObjId>> pairs_;  // (X, Z), Z <= X
    std::map<std::pair<ObjId, ObjId>, ObjId> pair_to_obj_;
    ObjId initial_ = kNoObj;

    std::vector<Mor> mors_;
    std::map<std::tuple<ObjId, ObjId, MorId>, MorId> mor_ids_;
    std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_cache_;
};

// Convenience factory used by the session layer.
std::unique_ptr<F1PlusInstance> build_f1_plus(ConcreteSetInstance& base);

}  // namespace swk

#pragma once

#include <map>
#include <string>
#include <vector>

#include "swk/core.hpp"

namespace swk {

class ConcreteSetInstance;

// Fully explicit SW-instance: every table is stored.  Used for custom
// instances (including deliberately broken ones in tests) and as the JSON
// serialization form.  Cartesian/cocartesian tests fall back to the
// universal property, checked by enumeration over the stored tables.
class TabulatedInstance final : public SwCategory {
public:
    struct MorData {
        ObjId src, dst;
        std::string name;
    };

    // -- construction (fill tables, then call finalize()) ----------------
    ObjId add_object(std::string label, int size, std::string iso_label = "");
    MorId add_mor(ObjId src, ObjId dst, std::string name = "");
    void set_composite(MorId f, MorId g, MorId gf);  // g . f = gf
    void set_identity(ObjId x, MorId id);
    void set_initial(ObjId x) { initial_ = x; }
    void mark_cof(MorId f, bool v = true) { cof_[f] = v; }
    void mark_fib(MorId f, bool v = true) { fib_[f] = v; }
    void mark_weq(MorId f, bool v = true) { weq_[f] = v; }
    void add_triple(MorId cof, MorId leg);
    void set_pushout(MorId c1, MorId c2, PushoutResult p);
    void set_pullback(MorId f, MorId g, PullbackResult p);
    void finalize();  // validates tables; throws StructuralError

    // -- SwCategory -------------------------------------------------------
    int object_count() const override { return (int)labels_.size(); }
    int object_size(ObjId x) const override { return sizes_.at(x); }
    std::string object_label(ObjId x) const override { return labels_.at(x); }
    std::string canonical_label(ObjId x) const override {
        return iso_labels_.at(x);
    }
    ObjId initial_object() const override { return initial_; }
    ObjId mor_src(MorId f) const override { return mors_.at(f).src; }
    ObjId mor_dst(MorId f) const override { return mors_.at(f).dst; }
    MorId identity(ObjId x) override;
    MorId compose(MorId f, MorId g) override;
    std::vector<MorId> hom(ObjId a, ObjId b) override;
    bool is_cof(MorId f) const override { return cof_.at(f); }
    bool is_fib(MorId f) const override { return fib_.at(f); }
    bool is_weq(MorId f) const override { return weq_.at(f); }
    bool is_iso(MorId f) const override;
    std::vector<MorId> cof_subobject_reps(ObjId x) override;
    std::vector<MorId> fib_into_reps(ObjId x) override;
    std::optional<SubtractionTriple> subtraction(MorId cof) override;
    bool is_subtraction_triple(MorId cof, MorId leg) override;
    std::optional<PushoutResult> pushout(MorId c1, MorId c2) override;
    std::optional<MorId> pushout_mediator(MorId c1, MorId c2,
                                          const PushoutResult& p, MorId f,
                                          MorId g) override;
    std::optional<PullbackResult> pullback(MorId f, MorId g) override;
    bool is_cartesian(MorId p, MorId q, MorId f, MorId g) override;
    bool is_cocartesian(MorId c1, MorId c2, MorId l1, MorId l2) override;

    // -- serialization ----------------------------------------------------
    std::string to_json() const;
    static TabulatedInstance from_json(const std::string& text);

    const std::vector<std::pair<MorId, MorId>>& triples() const {
        return triples_;
    }

private:
    bool finalized_ = false;
    std::vector<std::string> labels_;
    std::vector<std::string> iso_labels_;
    std::vector<int> sizes_;
    std::vector<MorData> mors_;
    std::map<std::pair<MorId, MorId>, MorId> comp_;  // (f,g) -> g.f
    std::vector<MorId> identities_;
    ObjId initial_ = kNoObj;
    std::vector<bool> cof_, fib_, weq_;
    std::vector<std::pair<MorId, MorId>> triples_;
    std::map<std::pair<MorId, MorId>, PushoutResult> pushouts_;
    std::map<std::pair<MorId, MorId>, PullbackResult> pullbacks_;
};

// Tabulate the bounded window of any SW-instance (used for round-trips).
TabulatedInstance tabulate(SwCategory& c, int bound);

}  // namespace swk

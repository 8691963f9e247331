#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swk {

using ObjId = int32_t;
using MorId = int32_t;

inline constexpr ObjId kNoObj = -1;
inline constexpr MorId kNoMor = -1;

// A certified subtraction sequence Z >-> X <- Y: `cof` is Z >-> X, `leg` is
// the fibration Y -> X, `complement` is Y.
struct SubtractionTriple {
    MorId cof = kNoMor;
    MorId leg = kNoMor;
    ObjId complement = kNoObj;
};

// Chosen pushout of a cospan X <-c1- Z -c2-> Y of cofibrations.
struct PushoutResult {
    ObjId apex = kNoObj;
    MorId from_left = kNoMor;   // X -> apex
    MorId from_right = kNoMor;  // Y -> apex
};

// Chosen pullback of a span A -f-> C <-g- B.
struct PullbackResult {
    ObjId apex = kNoObj;
    MorId to_left = kNoMor;   // apex -> A
    MorId to_right = kNoMor;  // apex -> B
};

struct Violation {
    std::string axiom;   // e.g. "axiom 4(b)"
    std::string detail;  // offending configuration, identifiers included
};

struct CheckReport {
    std::vector<Violation> violations;
    long configurations = 0;  // configurations examined

    bool ok() const { return violations.empty(); }
    void add(const std::string& axiom, const std::string& detail) {
        violations.push_back({axiom, detail});
    }
    // Deterministic order regardless of how the search ran.
    void normalize();
    std::string summary() const;
};

// Thrown for malformed instances (dangling identifiers, bad tables).
struct StructuralError : std::exception {
    std::string message;
    explicit StructuralError(std::string m) : message(std::move(m)) {}
    const char* what() const noexcept override { return message.c_str(); }
};

// Thrown when an enumeration would exceed its configured budget.
struct BudgetError : std::exception {
    std::string message;
    long long required = 0;
    explicit BudgetError(std::string m, long long req = 0)
        : message(std::move(m)), required(req) {}
    const char* what() const noexcept override { return message.c_str(); }
};

// Abstract contract for a decidable SW-category realization.  Morphism
// identifiers are interned: equal morphisms get equal ids, so identity
// checks compare ids.  All data is immutable once built; the mutable
// caches behind hom() are filled on demand.
class SwCategory {
public:
    virtual ~SwCategory() = default;

    virtual int object_count() const = 0;
    virtual int object_size(ObjId x) const = 0;
    virtual std::string object_label(ObjId x) const = 0;
    // Canonical iso-class key; equal labels <=> isomorphic objects.
    virtual std::string canonical_label(ObjId x) const = 0;
    virtual ObjId initial_object() const = 0;

    virtual ObjId mor_src(MorId f) const = 0;
    virtual ObjId mor_dst(MorId f) const = 0;
    virtual MorId identity(ObjId x) = 0;
    // Composite g . f where dst(f) == src(g).
    virtual MorId compose(MorId f, MorId g) = 0;
    virtual std::vector<MorId> hom(ObjId a, ObjId b) = 0;

    virtual bool is_cof(MorId f) const = 0;
    virtual bool is_fib(MorId f) const = 0;
    virtual bool is_weq(MorId f) const = 0;
    virtual bool is_iso(MorId f) const = 0;

    // Canonical representatives of cofibration subobjects of x, one per
    // subobject (image); exhaustive for the axiom loops.
    virtual std::vector<MorId> cof_subobject_reps(ObjId x) = 0;
    // Representatives of fibrations into x (the axiom loops quantify over
    // these where a fibration leg is required).
    virtual std::vector<MorId> fib_into_reps(ObjId x) = 0;

    // The instance's chosen subtraction sequence for a cofibration, if any.
    virtual std::optional<SubtractionTriple> subtraction(MorId cof) = 0;
    // Whether (cof, leg) is a certified subtraction sequence.
    virtual bool is_subtraction_triple(MorId cof, MorId leg) = 0;

    // Chosen pushout of a cospan of cofibrations with common source.
    virtual std::optional<PushoutResult> pushout(MorId c1, MorId c2) = 0;
    // Mediating map out of a chosen pushout, given a commuting cocone.
    virtual std::optional<MorId> pushout_mediator(MorId c1, MorId c2,
                                                  const PushoutResult& p,
                                                  MorId f, MorId g) = 0;
    // Chosen pullback of f: A -> C, g: B -> C where g is a cofibration or
    // fibration (the only cases the axioms promise).
    virtual std::optional<PullbackResult> pullback(MorId f, MorId g) = 0;
    // Square  apex -p-> A -f-> C,  apex -q-> B -g-> C  cartesian?
    virtual bool is_cartesian(MorId p, MorId q, MorId f, MorId g) = 0;
    // Square  Z -c1-> X -l1-> P,  Z -c2-> Y -l2-> P  cocartesian?
    virtual bool is_cocartesian(MorId c1, MorId c2, MorId l1, MorId l2) = 0;

    // Objects of size <= bound in id order.
    std::vector<ObjId> objects_within(int bound) const;
    // Basic well-formedness helpers shared by checkers.
    bool same_target(MorId f, MorId g) const {
        return mor_dst(f) == mor_dst(g);
    }
};

}  // namespace swk

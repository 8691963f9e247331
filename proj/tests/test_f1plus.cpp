#include "doctest.h"
#include "swk/checkers.hpp"
#include "swk/f1plus.hpp"

using namespace swk;

TEST_CASE("subtraction sequences over finset(2)") {
    auto base = ConcreteSetInstance::finset(2);
    auto f1 = build_f1_plus(base);
    // sum over X of 2^|X| = 1 + 2 + 2 + 4
    CHECK(f1->object_count() == 9);
    CHECK(f1->object_label(f1->initial_object()) == "[{}<={}]");

    ObjId a = base.require_object(0b01);
    ObjId ab = base.require_object(0b11);
    ObjId pair = f1->obj_of_pair(ab, a);  // {a} <= {a,b}
    REQUIRE(pair != kNoObj);
    CHECK(f1->s_obj(pair) == a);
    CHECK(f1->t_obj(pair) == ab);
    CHECK(base.object_label(f1->q_obj(pair)) == "{b}");
    CHECK(f1->cof_subobject_reps(pair).size() == 4);
}

TEST_CASE("morphisms are base maps with exact preimages") {
    auto base = ConcreteSetInstance::finset(2);
    auto f1 = build_f1_plus(base);
    ObjId a = base.require_object(0b01);
    ObjId ab = base.require_object(0b11);
    ObjId p_a_ab = f1->obj_of_pair(ab, a);
    ObjId p_0_ab = f1->obj_of_pair(ab, base.initial_object());
    ObjId p_ab_ab = f1->obj_of_pair(ab, ab);

    // identity on the base with a different marked part: not a morphism
    CHECK(f1->hom(p_a_ab, p_0_ab).empty());
    CHECK(f1->hom(p_a_ab, p_ab_ab).empty());
    // Only the identity preserves the marked subset {a}; with an empty
    // marked part every base self-map qualifies.
    CHECK(f1->hom(p_a_ab, p_a_ab).size() == 1);
    CHECK(f1->hom(p_0_ab, p_0_ab).size() == 4);

    // the three projections take a morphism to its levels
    MorId m = f1->hom(p_a_ab, p_a_ab)[0];
    CHECK(base.mor_src(f1->t_mor(m)) == ab);
    CHECK(base.mor_src(f1->s_mor(m)) == a);
    CHECK(base.object_size(base.mor_src(f1->q_mor(m))) == 1);
}

TEST_CASE("levelwise subtraction in the sequence category") {
    auto base = ConcreteSetInstance::finset(2);
    auto f1 = build_f1_plus(base);
    ObjId a = base.require_object(0b01);
    ObjId b = base.require_object(0b10);
    ObjId ab = base.require_object(0b11);
    ObjId big = f1->obj_of_pair(ab, a);   // {a} <= {a,b}
    ObjId sub = f1->obj_of_pair(a, a);    // {a} <= {a}
    MorId inc = kNoMor;
    for (MorId m : f1->cof_subobject_reps(big))
        if (f1->mor_src(m) == sub) inc = m;
    REQUIRE(inc != kNoMor);
    auto s = f1->subtraction(inc);
    REQUIRE(s.has_value());
    // complement of ({a}<={a}) inside ({a}<={a,b}) is ({}<={b})
    CHECK(f1->t_obj(s->complement) == b);
    CHECK(f1->s_obj(s->complement) == base.initial_object());
    CHECK(f1->is_subtraction_triple(inc, s->leg));
}

TEST_CASE("the sequence category satisfies the axioms over finset(2)") {
    auto base = ConcreteSetInstance::finset(2);
    auto f1 = build_f1_plus(base);
    auto r1 = check_subtraction_axioms(*f1, 2);
    CAPTURE(r1.summary());
    CHECK(r1.ok());
    auto r2 = check_subtractive_axioms(*f1, 2);
    CAPTURE(r2.summary());
    CHECK(r2.ok());
    auto r3 = check_sw_axioms(*f1, 2);
    CAPTURE(r3.summary());
    CHECK(r3.ok());
}

#include "doctest.h"
#include "swk/checkers.hpp"
#include "swk/concrete.hpp"
#include "swk/tabulated.hpp"

using namespace swk;

TEST_CASE("axiom checkers pass on small finite-set windows") {
    auto c2 = ConcreteSetInstance::finset(2);
    for (auto* rep : {new CheckReport(check_subtraction_axioms(c2, 2)),
                      new CheckReport(check_subtractive_axioms(c2, 2)),
                      new CheckReport(check_sw_axioms(c2, 2))}) {
        CAPTURE(rep->summary());
        CHECK(rep->ok());
        CHECK(rep->configurations > 0);
        delete rep;
    }
}

TEST_CASE("axiom checkers pass on finset(3)") {
    auto c = ConcreteSetInstance::finset(3);
    auto r1 = check_subtraction_axioms(c, 3);
    CAPTURE(r1.summary());
    CHECK(r1.ok());
    auto r2 = check_subtractive_axioms(c, 3);
    CAPTURE(r2.summary());
    CHECK(r2.ok());
    auto r3 = check_sw_axioms(c, 3);
    CAPTURE(r3.summary());
    CHECK(r3.ok());
}

TEST_CASE("grid extension computes the expected complements") {
    auto c = ConcreteSetInstance::finset(3);
    ObjId W = c.require_object(0b010);   // {b}
    ObjId X = c.require_object(0b011);   // {a,b}
    ObjId Z = c.require_object(0b110);   // {b,c}
    ObjId Y = c.require_object(0b111);   // {a,b,c}
    auto g = extend_to_grid(c, c.inclusion(W, X), c.inclusion(W, Z),
                            c.inclusion(X, Y), c.inclusion(Z, Y));
    CAPTURE(g.report.summary());
    CHECK(g.report.ok());
    CHECK(c.object_label(g.obj[0][2]) == "{a}");  // X - W
    CHECK(c.object_label(g.obj[1][2]) == "{a}");  // Y - Z
    CHECK(c.object_label(g.obj[2][0]) == "{c}");  // Z - W
    CHECK(c.object_label(g.obj[2][1]) == "{c}");  // Y - X
    CHECK(g.obj[2][2] == c.initial_object());     // corner is empty
}

TEST_CASE("grid extension rejects non-cartesian squares") {
    auto c = ConcreteSetInstance::finset(3);
    ObjId W = c.initial_object();  // too small: {a,b} and {b,c} meet in {b}
    ObjId X = c.require_object(0b011);
    ObjId Z = c.require_object(0b110);
    ObjId Y = c.require_object(0b111);
    CHECK_THROWS_AS(extend_to_grid(c, c.inclusion(W, X), c.inclusion(W, Z),
                                   c.inclusion(X, Y), c.inclusion(Z, Y)),
                    StructuralError);
}

namespace {

// Two objects 0 (empty, initial) and A = {*}; complete composition tables
// and pullbacks, but no subtraction sequences at all.
TabulatedInstance no_triples_instance() {
    TabulatedInstance t;
    ObjId e = t.add_object("0", 0, "n=0");
    ObjId a = t.add_object("A", 1, "n=1");
    MorId ide = t.add_mor(e, e, "id0");
    MorId ida = t.add_mor(a, a, "idA");
    MorId i = t.add_mor(e, a, "i");
    t.set_identity(e, ide);
    t.set_identity(a, ida);
    t.set_initial(e);
    t.set_composite(ide, ide, ide);
    t.set_composite(ida, ida, ida);
    t.set_composite(ide, i, i);
    t.set_composite(i, ida, i);
    for (MorId m : {ide, ida, i}) {
        t.mark_cof(m);
        t.mark_fib(m);
        t.mark_weq(m);
    }
    t.set_pullback(ide, ide, {e, ide, ide});
    t.set_pullback(i, i, {e, ide, ide});
    t.set_pullback(i, ida, {e, ide, i});
    t.set_pullback(ida, i, {e, i, ide});
    t.set_pullback(ida, ida, {a, ida, ida});
    t.set_pushout(ide, ide, {e, ide, ide});
    t.set_pushout(ide, i, {a, i, ida});
    t.finalize();
    return t;
}

}  // namespace

TEST_CASE("missing subtraction sequences are reported") {
    auto t = no_triples_instance();
    auto rep = check_subtraction_axioms(t, 1);
    CHECK_FALSE(rep.ok());
    bool saw_4b = false;
    for (auto& v : rep.violations)
        if (v.axiom == "axiom 4(b)") saw_4b = true;
    CHECK(saw_4b);
}

TEST_CASE("broken predicate tables are reported") {
    auto base = ConcreteSetInstance::finset(2);
    SUBCASE("an isomorphism that is not a cofibration") {
        TabulatedInstance t = tabulate(base, 2);
        ObjId ab = kNoObj;
        for (ObjId x = 0; x < t.object_count(); ++x)
            if (t.object_size(x) == 2) ab = x;
        REQUIRE(ab != kNoObj);
        t.mark_cof(t.identity(ab), false);
        auto rep = check_subtraction_axioms(t, 2);
        bool saw = false;
        for (auto& v : rep.violations)
            if (v.axiom == "axiom 2") saw = true;
        CHECK(saw);
    }
    SUBCASE("an isomorphism that is not a weak equivalence") {
        TabulatedInstance t = tabulate(base, 2);
        ObjId a = kNoObj;
        for (ObjId x = 0; x < t.object_count(); ++x)
            if (t.object_size(x) == 1) a = x;
        REQUIRE(a != kNoObj);
        t.mark_weq(t.identity(a), false);
        auto rep = check_sw_axioms(t, 2);
        bool saw = false;
        for (auto& v : rep.violations)
            if (v.axiom == "sw axiom (isomorphisms)") saw = true;
        CHECK(saw);
    }
}

TEST_CASE("tabulated window of a passing instance still passes") {
    auto base = ConcreteSetInstance::finset(2);
    TabulatedInstance t = tabulate(base, 2);
    auto r1 = check_subtraction_axioms(t, 2);
    CAPTURE(r1.summary());
    CHECK(r1.ok());
    auto r2 = check_subtractive_axioms(t, 2);
    CAPTURE(r2.summary());
    CHECK(r2.ok());
    auto r3 = check_sw_axioms(t, 2);
    CAPTURE(r3.summary());
    CHECK(r3.ok());
}

TEST_CASE("equal-size weak equivalences also satisfy the sw axioms") {
    auto c = ConcreteSetInstance::finset(3);
    c.set_weq_policy(ConcreteSetInstance::WeqPolicy::EqualSize);
    auto rep = check_sw_axioms(c, 3);
    CAPTURE(rep.summary());
    CHECK(rep.ok());
}

#include "doctest.h"
#include "swk/flag.hpp"

using namespace swk;

namespace {

// all simplicial identities for every flag in the list
void check_simplicial_identities(SwCategory& c, const std::vector<Flag>& flags) {
    for (const Flag& x : flags) {
        const int n = x.n;
        // d_i d_j = d_{j-1} d_i   (i < j)
        if (n >= 2)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    CHECK(face(c, face(c, x, j), i) ==
                          face(c, face(c, x, i), j - 1));
        // s_i s_j = s_{j+1} s_i   (i <= j)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                CHECK(degeneracy(c, degeneracy(c, x, j), i) ==
                      degeneracy(c, degeneracy(c, x, i), j + 1));
        // d_i s_j
        for (int j = 0; j <= n; ++j) {
            Flag sx = degeneracy(c, x, j);
            CHECK(face(c, sx, j) == x);
            CHECK(face(c, sx, j + 1) == x);
            for (int i = 0; i < j; ++i)
                CHECK(face(c, sx, i) ==
                      degeneracy(c, face(c, x, i), j - 1));
            for (int i = j + 2; i <= n + 1; ++i)
                CHECK(face(c, sx, i) ==
                      degeneracy(c, face(c, x, i - 1), j));
        }
    }
}

}  // namespace

TEST_CASE("flags: canonical completion from a top row") {
    auto c = ConcreteSetInstance::finset(3);
    ObjId e = c.initial_object();
    ObjId a = c.require_object(0b001);
    ObjId abc = c.require_object(0b111);
    Flag f = flag_from_top_row(c, {e, a, abc});
    CHECK(f.n == 2);
    CHECK(c.object_label(f.obj[1][2]) == "{b,c}");
    auto rep = validate_flag(c, f);
    CAPTURE(rep.summary());
    CHECK(rep.ok());

    // a non-chain is rejected
    ObjId b = c.require_object(0b010);
    CHECK_THROWS_AS(flag_from_top_row(c, {e, a, b}), StructuralError);
}

TEST_CASE("flags: enumeration counts") {
    auto c2 = ConcreteSetInstance::finset(2);
    // chains of length n: each atom independently enters at one of n steps
    // or never => (n+1)^2 flags
    CHECK(enumerate_flags(c2, 1).size() == 4);
    CHECK(enumerate_flags(c2, 2).size() == 9);
    auto c3 = ConcreteSetInstance::finset(3);
    CHECK(enumerate_flags(c3, 3).size() == 64);
    for (const Flag& f : enumerate_flags(c3, 2)) {
        auto rep = validate_flag(c3, f);
        CAPTURE(rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("flags: broken data is detected") {
    auto c = ConcreteSetInstance::finset(3);
    ObjId e = c.initial_object();
    ObjId a = c.require_object(0b001);
    ObjId ab = c.require_object(0b011);
    Flag f = flag_from_top_row(c, {e, a, ab});
    // corrupt the complement slot: {b} -> {a}, which is not the complement
    f.obj[1][2] = a;
    f.h[1][1] = c.inclusion(e, a);
    f.v[0][2] = c.inclusion(a, ab);
    f.v[1][2] = c.inclusion(e, a);
    auto rep = validate_flag(c, f);
    CHECK_FALSE(rep.ok());
    bool saw_triple = false;
    for (auto& v : rep.violations)
        if (v.axiom == "flag triples") saw_triple = true;
    CHECK(saw_triple);
}

TEST_CASE("flags: simplicial identities hold strictly") {
    auto c = ConcreteSetInstance::finset(2);
    for (int deg = 1; deg <= 3; ++deg)
        check_simplicial_identities(c, enumerate_flags(c, deg));
    // faces and degeneracies stay valid flags
    auto c3 = ConcreteSetInstance::finset(3);
    for (const Flag& f : enumerate_flags(c3, 3)) {
        for (int k = 0; k <= f.n; ++k) {
            CHECK(validate_flag(c3, face(c3, f, k)).ok());
            CHECK(validate_flag(c3, degeneracy(c3, f, k)).ok());
        }
    }
}

TEST_CASE("biflags: intersection model satisfies all four conditions") {
    auto c = ConcreteSetInstance::finset(4);
    ObjId e = c.initial_object();
    ObjId a = c.require_object(0b0011);
    ObjId ab = c.require_object(0b1111);
    ObjId x = c.require_object(0b0101);
    BiFlag bf = biflag_from_chains(c, {e, a, ab}, {e, x, ab});
    auto rep = validate_biflag(c, bf);
    CAPTURE(rep.summary());
    CHECK(rep.ok());

    // corrupting one slot breaks a mixed square or slice
    bf.obj[1][2][1][2] = e;
    auto bad = validate_biflag(c, bf);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("biflags: G-set chains work as well") {
    auto g = GroupTable::cyclic(2);
    auto c = ConcreteSetInstance::gset(g, 4);
    // chain of stable subsets: {} <= one fixed point <= fixed + free orbit
    ObjId e = c.initial_object();
    ObjId one = kNoObj, three = kNoObj;
    for (ObjId x = 0; x < c.object_count(); ++x) {
        if (c.object_size(x) == 1 && one == kNoObj) one = x;
        if (one != kNoObj && c.object_size(x) == 3 &&
            (c.mask_of(one) & ~c.mask_of(x)) == 0 && three == kNoObj)
            three = x;
    }
    REQUIRE(one != kNoObj);
    REQUIRE(three != kNoObj);
    Flag f = flag_from_top_row(c, {e, one, three});
    CHECK(validate_flag(c, f).ok());
}

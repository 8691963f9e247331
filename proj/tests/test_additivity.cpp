#include <doctest.h>

#include <fstream>
#include <sstream>

#include "swk/additivity.hpp"

using namespace swk;

namespace {

struct Setup {
    ConcreteSetInstance c;
    std::unique_ptr<F1PlusInstance> fp;
    explicit Setup(int universe) : c(ConcreteSetInstance::finset(universe)) {
        fp = build_f1_plus(c);
    }
};

ObjId obj(ConcreteSetInstance& c, Mask m) { return c.require_object(m); }

}  // namespace

TEST_CASE("rho: set-difference oracle and degenerate cases") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    // tail {a} c {a,b} c {a,b,c}, first tail object {a}
    Flag f = flag_from_top_row(
        c, {c.initial_object(), obj(c, 0b0001), obj(c, 0b0011),
            obj(c, 0b0111)});
    Flag r = rho_flag(c, f, 0);
    CHECK(r.n == 2);
    CHECK(r.obj[0][0] == c.initial_object());
    CHECK(c.mask_of(r.obj[0][1]) == 0b0010);
    CHECK(c.mask_of(r.obj[0][2]) == 0b0110);
    CHECK(validate_flag(c, r).ok());

    // n = 0: subtracting the first tail object from itself
    Flag g = flag_from_top_row(c, {c.initial_object(), obj(c, 0b0011)});
    Flag r0 = rho_flag(c, g, 0);
    CHECK(r0.n == 0);
    CHECK(r0.obj[0][0] == c.initial_object());

    CHECK_THROWS_AS(rho_flag(c, g, 1), StructuralError);
}

TEST_CASE("element construction: chains, validation, bad chains rejected") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;

    // (0,0) c ({a},{a}) c ({a,b},{a}), S: {a} c {a,b}, T: {b} c {a,b}
    std::vector<ObjId> chain{fp.initial_object(),
                             fp.obj_of_pair(obj(c, 0b01), obj(c, 0b01)),
                             fp.obj_of_pair(obj(c, 0b11), obj(c, 0b01))};
    AddElement e = add_element_from_chains(
        fp, chain, {obj(c, 0b01), obj(c, 0b11)}, {obj(c, 0b10), obj(c, 0b11)});
    CHECK(e.m == 2);
    CHECK(e.n == 1);
    CHECK(validate_add_element(fp, e).ok());

    // non-cartesian step: Z jumps without X seeing it
    std::vector<ObjId> bad{fp.initial_object(),
                           fp.obj_of_pair(obj(c, 0b11), c.initial_object()),
                           fp.obj_of_pair(obj(c, 0b11), obj(c, 0b01))};
    CHECK_THROWS_AS(f1_flag_from_chain(fp, bad), StructuralError);

    // tail below the floor: S_0 must contain Z_m
    CHECK_THROWS_AS(
        add_element_from_chains(fp, chain, {c.initial_object()},
                                {obj(c, 0b10)}),
        StructuralError);
}

TEST_CASE("insert and rho are a section/retraction pair; E_n slot check") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    for (const AddElement& e : enumerate_add_elements(fp, 1, 1, 2)) {
        auto [sf, tf] = rho(fp, e);
        CHECK(validate_flag(c, sf).ok());
        CHECK(validate_flag(c, tf).ok());
        // rho o I = id, strictly
        AddElement ins = insert_flags(fp, sf, tf, e.m);
        auto [sf2, tf2] = rho(fp, ins);
        CHECK(sf2 == sf);
        CHECK(tf2 == tf);
        // I o rho = E_n, strictly
        AddElement en = e_n(fp, e);
        CHECK(en == insert_flags(fp, sf, tf, e.m));
        CHECK(validate_add_element(fp, en).ok());
        // E_n is supported entirely on the subtracted tails
        for (int k = 0; k <= e.m; ++k)
            for (int l = k; l <= e.m; ++l)
                CHECK(en.f1.obj[k][l] == fp.initial_object());
        for (int j = 0; j <= e.n; ++j) {
            ObjId s0 = e.s.obj[0][e.m + 1];
            Mask want = c.mask_of(e.s.obj[0][e.m + 1 + j]) & ~c.mask_of(s0);
            CHECK(c.mask_of(en.s.obj[0][e.m + 1 + j]) == want);
        }
    }
}

TEST_CASE("gamma: retraction onto the zero-Z subspace") {
    Setup w(4);
    F1PlusInstance& fp = *w.fp;
    ConcreteSetInstance& c = w.c;
    int fixed = 0;
    for (const AddElement& e : enumerate_add_elements(fp, 1, 1, 2)) {
        AddElement g = gamma(fp, e);
        CHECK(validate_add_element(fp, g).ok());
        // the pair flag is zeroed onto the complement level
        for (int k = 0; k <= e.m; ++k)
            for (int l = k; l <= e.m; ++l) {
                CHECK(fp.s_obj(g.f1.obj[k][l]) == c.initial_object());
                CHECK(fp.t_obj(g.f1.obj[k][l]) == e.t.obj[k][l]);
            }
        // complement flag untouched, S-tail subtracted
        CHECK(g.t == e.t);
        for (int j = 0; j <= e.n; ++j)
            CHECK(c.mask_of(g.s.obj[0][e.m + 1 + j]) ==
                  (c.mask_of(e.s.obj[0][e.m + 1 + j]) &
                   ~c.mask_of(e.s.obj[0][e.m + 1])));
        // idempotent
        CHECK(gamma(fp, g) == g);
        // fixes elements with all A_i = 0 and first tail object 0 pointwise
        bool in_x = true;
        for (int l = 0; l <= e.m + 1; ++l)
            in_x = in_x && e.s.obj[0][l] == c.initial_object();
        if (in_x) {
            CHECK(g == e);
            ++fixed;
        }
    }
    CHECK(fixed > 0);
}

TEST_CASE("homotopy: hand-checked grids for a two-step element") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    // m = 1, n = 0: A = (0, {a}), C = (0, {a,b}), S_0 = {a}, T_0 = {b}
    std::vector<ObjId> chain{fp.initial_object(),
                             fp.obj_of_pair(obj(c, 0b11), obj(c, 0b01))};
    AddElement e = add_element_from_chains(fp, chain, {obj(c, 0b01)},
                                           {obj(c, 0b10)});
    REQUIRE(validate_add_element(fp, e).ok());

    AddElement h0 = homotopy_h(fp, 0, e);
    REQUIRE(validate_add_element(fp, h0).ok());
    CHECK(h0.m == 2);
    // row 0: A-level is 0, then fresh copies of S_0 - A_0 = {a}
    CHECK(fp.s_obj(h0.f1.obj[0][0]) == c.initial_object());
    CHECK(c.object_size(fp.s_obj(h0.f1.obj[0][1])) == 1);
    CHECK(c.object_size(fp.s_obj(h0.f1.obj[0][2])) == 1);
    // C-level row 0: 0, S_0-copy, C_1 u_{A_1} S_0 (sizes 0, 1, 2)
    CHECK(c.object_size(fp.t_obj(h0.f1.obj[0][1])) == 1);
    CHECK(c.object_size(fp.t_obj(h0.f1.obj[0][2])) == 2);
    // B-level repeats: rows below the inserted one carry e's B-data
    CHECK(fp.q_obj(h0.f1.obj[1][1]) == c.initial_object());
    CHECK(fp.q_obj(h0.f1.obj[1][2]) == e.t.obj[0][1]);
    // identities at the ends
    CHECK(add_face(fp, h0, 0) == gamma(fp, e));

    AddElement h1 = homotopy_h(fp, 1, e);
    REQUIRE(validate_add_element(fp, h1).ok());
    CHECK(add_face(fp, h1, 2) == e);
    // the inserted column repeats B_1 on the complement level
    CHECK(fp.q_obj(h1.f1.obj[0][2]) == fp.q_obj(e.f1.obj[0][1]));
    CHECK(fp.q_obj(h1.f1.obj[1][2]) == c.initial_object());
}

TEST_CASE("homotopy: hand instance of d_2 h_1 = h_1 d_1") {
    // The exchange at index j+1 is not one of the homotopy identities in
    // general; it does hold on elements whose columns 1 and 2 coincide.
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    ObjId p = fp.obj_of_pair(obj(c, 0b01), c.initial_object());
    AddElement e = add_element_from_chains(fp, {fp.initial_object(), p, p},
                                           {obj(c, 0b01)}, {obj(c, 0b11)});
    REQUIRE(validate_add_element(fp, e).ok());
    AddElement lhs = add_face(fp, homotopy_h(fp, 1, e), 2);
    AddElement rhs = homotopy_h(fp, 1, add_face(fp, e, 1));
    CHECK(lhs == rhs);
}

TEST_CASE("homotopy: hand instance of d_3 h_1 = h_1 d_2") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    std::vector<ObjId> chain{fp.initial_object(),
                             fp.obj_of_pair(obj(c, 0b01), obj(c, 0b01)),
                             fp.obj_of_pair(obj(c, 0b11), obj(c, 0b01))};
    AddElement e = add_element_from_chains(fp, chain, {obj(c, 0b11)},
                                           {obj(c, 0b10)});
    AddElement lhs = add_face(fp, homotopy_h(fp, 1, e), 3);
    AddElement rhs = homotopy_h(fp, 1, add_face(fp, e, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("homotopy: C-rows are certified subtraction triples by case") {
    Setup w(4);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    std::vector<ObjId> chain{fp.initial_object(),
                             fp.obj_of_pair(obj(c, 0b01), obj(c, 0b01)),
                             fp.obj_of_pair(obj(c, 0b11), obj(c, 0b01))};
    AddElement e = add_element_from_chains(fp, chain, {obj(c, 0b11)},
                                           {obj(c, 0b11)});
    AddElement h = homotopy_h(fp, 1, e);  // i = 1, degree 3
    // all triples (k <= l <= s) of the output pair flag, which covers the
    // three case regions l,s <= i; l <= i < s; i < l,s
    int seen = 0;
    for (int k = 0; k <= h.m; ++k)
        for (int l = k; l <= h.m; ++l)
            for (int s = l; s <= h.m; ++s) {
                CHECK(fp.is_subtraction_triple(
                    flag_row_mor(fp, h.f1, k, l, s),
                    flag_leg_mor(fp, h.f1, k, l, s)));
                ++seen;
            }
    CHECK(seen == 20);
}

TEST_CASE("homotopy identity table: exhaustive small bidegrees") {
    Setup w(4);
    F1PlusInstance& fp = *w.fp;
    long long strict = 0, iso = 0;
    for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
        auto corpus = enumerate_add_elements(fp, m, n, 2);
        CHECK(!corpus.empty());
        HomotopyReport r = verify_homotopy(fp, corpus);
        CHECK(r.report.ok());
        CHECK(r.elements_checked == (long long)corpus.size());
        strict += r.strict;
        iso += r.up_to_iso;
    }
    CHECK(strict > 0);
    // all identities certify on the nose with the canonical choices
    CHECK(iso == 0);
}

TEST_CASE("homotopy identity table: degenerate all-empty element") {
    Setup w(4);
    F1PlusInstance& fp = *w.fp;
    ConcreteSetInstance& c = w.c;
    std::vector<ObjId> chain(3, fp.initial_object());
    AddElement e = add_element_from_chains(
        fp, chain, {c.initial_object(), c.initial_object()},
        {c.initial_object(), c.initial_object()});
    HomotopyReport r = verify_homotopy(fp, {e});
    CHECK(r.report.ok());
    CHECK(r.up_to_iso == 0);
}

TEST_CASE("homotopy identity table: seeded random elements, wider base") {
    Setup w(6);
    F1PlusInstance& fp = *w.fp;
    auto corpus = random_add_elements(fp, 3, 80, 20260823u, 2, 2);
    for (const AddElement& e : corpus)
        REQUIRE(validate_add_element(fp, e).ok());
    HomotopyReport r = verify_homotopy(fp, corpus);
    CHECK(r.report.ok());
    CHECK(r.elements_checked == 80);
    CHECK(r.up_to_iso == 0);
}

TEST_CASE("corpus helpers: headroom is enforced") {
    Setup w(4);
    CHECK_THROWS_AS(enumerate_add_elements(*w.fp, 1, 1, 3), StructuralError);
    CHECK_THROWS_AS(random_add_elements(*w.fp, 3, 5, 1u, 1, 1),
                    StructuralError);
}

TEST_CASE("appendix five-simplex: grid shapes") {
    Setup w(6);
    ConcreteSetInstance& c = w.c;
    F1PlusInstance& fp = *w.fp;
    AddElement e = appendix_element(fp);
    REQUIRE(validate_add_element(fp, e).ok());
    CHECK(e.m == 5);
    CHECK(e.n == 0);
    AddElement h = homotopy_h(fp, 3, e);
    REQUIRE(validate_add_element(fp, h).ok());
    CHECK(h.m == 6);

    // A-grid: rows k <= 3 become constant S_0 - A_k blocks past column 3
    for (int k = 0; k <= 3; ++k) {
        Mask want = ((Mask(1) << 5) - 1) & ~((Mask(1) << k) - 1);
        for (int l = 4; l <= 6; ++l) {
            ObjId a = fp.s_obj(h.f1.obj[k][l]);
            CHECK(c.object_size(a) == (int)__builtin_popcountll(want));
            CHECK(c.canonical_label(a) ==
                  c.canonical_label(c.require_object(want)));
        }
    }
    // rows past the inserted one are zero on the A-level
    for (int k = 4; k <= 6; ++k)
        for (int l = k; l <= 6; ++l)
            CHECK(fp.s_obj(h.f1.obj[k][l]) == c.initial_object());

    // B-grid: the inserted column repeats column 3; lower rows shift
    for (int k = 0; k <= 3; ++k)
        CHECK(fp.q_obj(h.f1.obj[k][4]) == fp.q_obj(h.f1.obj[k][3]));
    for (int k = 4; k <= 6; ++k)
        for (int l = k; l <= 6; ++l)
            CHECK(fp.q_obj(h.f1.obj[k][l]) == e.t.obj[k - 1][l - 1]);

    // C-grid tails: |C_{k,l-1} u_{A_{k,l-1}} (S_0 - A_k)|
    for (int k = 0; k <= 3; ++k)
        for (int l = 4; l <= 6; ++l) {
            int csz = c.object_size(fp.t_obj(e.f1.obj[k][l - 1]));
            int asz = c.object_size(fp.s_obj(e.f1.obj[k][l - 1]));
            CHECK(c.object_size(fp.t_obj(h.f1.obj[k][l])) ==
                  csz + (5 - k) - asz);
        }
}

TEST_CASE("appendix five-simplex: byte-identical golden JSON") {
    Setup w(6);
    std::string got = appendix_h3_json(*w.fp);
    std::ifstream in(std::string(SWK_FIXTURE_DIR) + "/appendix_h3.json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(got == buf.str());
}

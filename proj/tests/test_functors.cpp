#include <doctest.h>

#include "swk/flag.hpp"
#include "swk/functors.hpp"
#include "swk/poly.hpp"

using namespace swk;

namespace {

PointedMap pmap(int src, int dst, std::vector<int> vals) {
    PointedMap f;
    f.src = src;
    f.dst = dst;
    f.map = std::move(vals);
    f.validate();
    return f;
}

// Deliberately broken: the contravariant half drops every point.
struct DropPointsFunctor : WExactToFinSet {
    using WExactToFinSet::WExactToFinSet;
    PointedMap on_fib(MorId j) override {
        PointedMap m = WExactToFinSet::on_fib(j);
        for (int k = 1; k <= m.src; ++k) m.map[k] = 0;
        return m;
    }
};

// The unit functor with every object relabeled by the order-reversing
// isomorphism: still op-W-exact, but the splitting composite is only the
// identity up to that relabeling.
struct ReorderedUnitFunctor : OpWExactFromFinSet {
    using OpWExactFromFinSet::OpWExactFromFinSet;

    MorId mono_to_mor(const PointedMap& i) override {
        auto rev = [](int n) {
            PointedMap t;
            t.src = t.dst = n;
            t.map.assign(n + 1, 0);
            for (int k = 1; k <= n; ++k) t.map[k] = n + 1 - k;
            return t;
        };
        return OpWExactFromFinSet::mono_to_mor(
            compose_pointed(compose_pointed(rev(i.src), i), rev(i.dst)));
    }
};

}  // namespace

TEST_CASE("point-count functor: values and structure maps on finite sets") {
    auto c = ConcreteSetInstance::finset(3);
    auto f = point_count_functor(c);
    for (ObjId x : c.objects_within(3))
        CHECK(f->on_object(x) == c.object_size(x));

    ObjId ab = c.require_object(0b011);
    ObjId abc = c.require_object(0b111);
    MorId inc = c.inclusion(ab, abc);
    CHECK(f->on_cof(inc) == pmap(2, 3, {0, 1, 2}));
    // contravariant half restricts, sending missing atoms to the basepoint
    CHECK(f->on_fib(inc) == pmap(3, 2, {0, 1, 2, 0}));

    // excision on the nose: 3 = 2 + 1
    ObjId a = c.require_object(0b001);
    auto tri = c.subtraction(c.inclusion(a, abc));
    REQUIRE(tri);
    PointedMap fi = f->on_cof(tri->cof);
    PointedMap fq = f->on_fib(tri->leg);
    CHECK(fi.src == 1);
    CHECK(fq.dst == 2);
    CHECK(is_cofiber_sequence(fi, fq));
}

TEST_CASE("point-count functor: the parabola over F_3 has three points") {
    auto window = ConcreteSetInstance::varieties_window(3, 2);
    auto f = point_count_functor(window);

    auto a2 = ConstructibleSet::affine_space(3, 2);
    auto names = std::vector<std::string>{"x", "y"};
    auto [parabola, imm] =
        closed_subset(a2, {parse_poly("y - x^2", 3, names)});
    ObjId v = window_object(parabola, window);
    REQUIRE(v != kNoObj);
    CHECK(f->on_object(v) == 3);

    // excision across the window bridge: |A^2| = |V| + |A^2 - V|
    ObjId amb = window_object(a2, window);
    REQUIRE(amb != kNoObj);
    auto tri = window.subtraction(window.inclusion(v, amb));
    REQUIRE(tri);
    CHECK(is_cofiber_sequence(f->on_cof(tri->cof), f->on_fib(tri->leg)));
    CHECK(f->on_object(tri->complement) == 6);
}

TEST_CASE("w-exactness: point-count passes, point-dropping fails excision") {
    auto fin = ConcreteSetInstance::finset(3);
    auto f = point_count_functor(fin);
    CheckReport rep = check_w_exact(*f, 3);
    CHECK(rep.ok());
    CHECK(rep.configurations > 0);

    auto line = ConcreteSetInstance::varieties_window(2, 1);
    auto fv = point_count_functor(line);
    CHECK(check_w_exact(*fv, 2).ok());

    DropPointsFunctor broken(fin);
    CheckReport bad = check_w_exact(broken, 2);
    CHECK_FALSE(bad.ok());
    bool excision_witness = false;
    for (const auto& v : bad.violations)
        excision_witness = excision_witness || v.axiom == "w-exact excision";
    CHECK(excision_witness);
}

TEST_CASE("unit functor: objects, structure maps, excision") {
    auto c = ConcreteSetInstance::finset(6);
    auto g = unit_functor(c, 6);
    CHECK(g->on_object(0) == c.initial_object());
    CHECK(c.object_size(g->on_object(2)) == 2);
    CHECK(c.object_size(g->on_object(6)) == 6);
    CHECK_THROWS_AS(g->on_object(7), StructuralError);

    // G_* on a mono is the corresponding inclusion of fixed atoms
    MorId gi = g->on_cof(pmap(1, 3, {0, 2}));
    CHECK(c.is_cof(gi));
    CHECK(c.mor_src(gi) == g->on_object(1));
    CHECK(c.mor_dst(gi) == g->on_object(3));

    // cofiber sequence [1]+ -> [3]+ -> [2]+ lands on a subtraction triple
    PointedMap i = pmap(1, 3, {0, 1});
    PointedMap q = cofiber_projection(i);
    CHECK(c.is_subtraction_triple(g->on_cof(i), g->on_fib(q)));

    CHECK_THROWS_AS(g->on_cof(pmap(2, 2, {0, 1, 1})), StructuralError);
    CHECK_THROWS_AS(unit_functor(c, 7), StructuralError);
}

TEST_CASE("unit functor is op-w-exact in the bound") {
    auto c = ConcreteSetInstance::finset(6);
    auto g = unit_functor(c, 6);
    CheckReport rep = check_op_w_exact(*g, 4);
    CHECK(rep.ok());
    CHECK(rep.configurations > 0);

    ReorderedUnitFunctor h(c, 6);
    CHECK(check_op_w_exact(h, 3).ok());
}

TEST_CASE("splitting: the composite is the identity on the nose") {
    auto c = ConcreteSetInstance::finset(6);
    SplittingReport sp = check_splitting(c, 6);
    CHECK(sp.strict);
    CHECK(sp.up_to_iso);
    CHECK(sp.report.ok());
}

TEST_CASE("splitting: relabeled unit is identity only up to isomorphism") {
    auto c = ConcreteSetInstance::finset(6);
    ReorderedUnitFunctor g(c, 6);
    auto f = point_count_functor(c);
    SplittingReport sp = check_splitting(g, *f, 5);
    CHECK_FALSE(sp.strict);
    CHECK(sp.up_to_iso);
    CHECK(sp.report.ok());
}

TEST_CASE("induced flags: the {0} in A^1 over F_2 flag maps to 1 -> 2 -> 1") {
    auto window = ConcreteSetInstance::varieties_window(2, 1);
    auto f = point_count_functor(window);

    auto a1 = ConstructibleSet::affine_space(2, 1);
    auto names = std::vector<std::string>{"x"};
    auto [origin, imm] = closed_subset(a1, {parse_poly("x", 2, names)});
    ObjId vo = window_object(origin, window);
    ObjId va = window_object(a1, window);
    REQUIRE(vo != kNoObj);
    REQUIRE(va != kNoObj);

    Flag x = flag_from_top_row(window,
                               {window.initial_object(), vo, va});
    REQUIRE(validate_flag(window, x).ok());
    WFlag w = induced_flag_map(*f, x);
    CHECK(w.n == 2);
    CHECK(w.obj[0][1] == 1);
    CHECK(w.obj[0][2] == 2);
    CHECK(w.obj[1][2] == 1);
    CHECK(w.h[0][1] == pmap(1, 2, {0, 1}));
    CHECK(w.q[0][2] == pmap(2, 1, {0, 0, 1}));
    CHECK(validate_wflag(w).ok());
}

TEST_CASE("induced flags: all-degenerate flag maps to basepoints") {
    auto c = ConcreteSetInstance::finset(3);
    auto f = point_count_functor(c);
    ObjId e = c.initial_object();
    Flag x = flag_from_top_row(c, {e, e, e});
    WFlag w = induced_flag_map(*f, x);
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 2; ++j) CHECK(w.obj[i][j] == 0);
    CHECK(validate_wflag(w).ok());
}

TEST_CASE("induced flags commute with faces and degeneracies") {
    auto c = ConcreteSetInstance::finset(3);
    auto f = point_count_functor(c);
    int checked = 0;
    for (const Flag& x : enumerate_flags(c, 2)) {
        WFlag w = induced_flag_map(*f, x);
        REQUIRE(validate_wflag(w).ok());
        for (int k = 0; k <= 2; ++k) {
            CHECK(wface(w, k) == induced_flag_map(*f, face(c, x, k)));
            CHECK(wdegeneracy(w, k) ==
                  induced_flag_map(*f, degeneracy(c, x, k)));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

#include <doctest.h>

#include "swk/pointed.hpp"

using namespace swk;

namespace {

PointedMap make(int src, int dst, std::vector<int> vals) {
    PointedMap f;
    f.src = src;
    f.dst = dst;
    f.map = std::move(vals);
    f.validate();
    return f;
}

long long falling(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("pointed maps: shapes and composition") {
    PointedMap id3 = PointedMap::identity(3);
    CHECK(id3.apply(0) == 0);
    CHECK(id3.apply(2) == 2);
    CHECK(is_pointed_mono(id3));
    CHECK(is_pointed_fib(id3));

    PointedMap f = make(2, 3, {0, 3, 1});
    PointedMap g = make(3, 1, {0, 0, 1, 0});
    PointedMap h = compose_pointed(f, g);  // g after f
    CHECK(h.src == 2);
    CHECK(h.dst == 1);
    CHECK(h.map == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(compose_pointed(g, f), StructuralError);
    CHECK_THROWS_AS(make(2, 3, {1, 1, 2}), StructuralError);   // basepoint moved
    CHECK_THROWS_AS(make(2, 3, {0, 4, 1}), StructuralError);   // out of range
}

TEST_CASE("pointed maps: mono / fibration predicates") {
    CHECK(is_pointed_mono(make(1, 2, {0, 1})));
    CHECK_FALSE(is_pointed_mono(make(2, 2, {0, 1, 1})));
    CHECK_FALSE(is_pointed_mono(make(1, 2, {0, 0})));

    // fibration: every non-basepoint fiber is a singleton
    CHECK(is_pointed_fib(make(2, 1, {0, 0, 1})));
    CHECK(is_pointed_fib(make(3, 2, {0, 2, 0, 1})));
    CHECK_FALSE(is_pointed_fib(make(2, 1, {0, 1, 1})));  // fold is not a fib
    CHECK_FALSE(is_pointed_fib(make(1, 2, {0, 1})));     // misses 2
}

TEST_CASE("wrong-way maps: pinned values") {
    // i: [1]+ -> [2]+, 1 |-> 1; i^* collapses the corange
    PointedMap i = make(1, 2, {0, 1});
    PointedMap istar = wrongway_cof(i);
    CHECK(istar.map == std::vector<int>{0, 1, 0});

    // p: [2]+ -> [1]+ collapsing 1; p^* picks the unique preimage of 1
    PointedMap p = make(2, 1, {0, 0, 1});
    PointedMap pstar = wrongway_fib(p);
    CHECK(pstar.src == 1);
    CHECK(pstar.dst == 2);
    CHECK(pstar.map[1] == 2);

    CHECK_THROWS_AS(wrongway_cof(make(2, 2, {0, 1, 1})), StructuralError);
    CHECK_THROWS_AS(wrongway_fib(make(2, 1, {0, 1, 1})), StructuralError);
}

TEST_CASE("wrong-way maps: section/retraction identities, sizes <= 4") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            for (const PointedMap& i : all_pointed_monos(a, b))
                CHECK(compose_pointed(i, wrongway_cof(i)) ==
                      PointedMap::identity(a));
            for (const PointedMap& p : all_pointed_fibs(a, b))
                CHECK(compose_pointed(wrongway_fib(p), p) ==
                      PointedMap::identity(b));
        }
}

TEST_CASE("wrong-way maps: contravariant composition of wrongway_cof") {
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c)
                for (const PointedMap& f : all_pointed_monos(a, b))
                    for (const PointedMap& g : all_pointed_monos(b, c)) {
                        PointedMap gf = compose_pointed(f, g);
                        CHECK(wrongway_cof(gf) ==
                              compose_pointed(wrongway_cof(g),
                                              wrongway_cof(f)));
                    }
}

TEST_CASE("backwards-commute: wrong-ways of a commuting mono/fib square") {
    // square  a -i-> b,  a -j-> c,  b -j'-> d,  forced i': c -> d with
    // i' j = j' i.  Then j^* ; i  ==  i' ; (j')^*.
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (const PointedMap& i : all_pointed_monos(a, b))
                for (int c = 0; c <= a; ++c)
                    for (const PointedMap& j : all_pointed_fibs(a, c))
                        for (int d = 0; d <= b; ++d)
                            for (const PointedMap& jp :
                                 all_pointed_fibs(b, d)) {
                                PointedMap ip;
                                ip.src = c;
                                ip.dst = d;
                                ip.map.assign(c + 1, 0);
                                bool commutes = true;
                                for (int x = 1; x <= a && commutes; ++x) {
                                    int lo = j.map[x], hi = jp.map[i.map[x]];
                                    if (lo == 0)
                                        commutes = hi == 0;
                                    else
                                        ip.map[lo] = hi;
                                }
                                if (!commutes || !is_pointed_mono(ip))
                                    continue;
                                CHECK(compose_pointed(wrongway_fib(j), i) ==
                                      compose_pointed(ip, wrongway_fib(jp)));
                            }
}

TEST_CASE("cofiber sequences and the canonical projection") {
    PointedMap i = make(1, 3, {0, 2});
    PointedMap q = cofiber_projection(i);
    CHECK(q.map == std::vector<int>{0, 1, 0, 2});
    CHECK(is_cofiber_sequence(i, q));

    // wrong quotient: kills a non-image point
    CHECK_FALSE(is_cofiber_sequence(i, make(3, 2, {0, 0, 1, 2})));
    // wrong size
    CHECK_FALSE(is_cofiber_sequence(i, make(3, 1, {0, 1, 0, 0})));

    for (int a = 0; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (const PointedMap& m : all_pointed_monos(a, b))
                CHECK(is_cofiber_sequence(m, cofiber_projection(m)));
}

TEST_CASE("enumerations: counts and canonical collapses") {
    CHECK(all_pointed_maps(2, 3).size() == 16);  // (dst+1)^src
    CHECK(all_pointed_maps(0, 5).size() == 1);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            CHECK((long long)all_pointed_monos(a, b).size() ==
                  (a <= b ? falling(b, a) : 0));
            CHECK((long long)all_pointed_fibs(a, b).size() ==
                  binom(a, b) * [&] {
                      long long f = 1;
                      for (int i = 2; i <= b; ++i) f *= i;
                      return f;
                  }());
        }

    for (int n = 0; n <= 4; ++n) {
        auto cc = canonical_collapses(n);
        CHECK((int)cc.size() == (1 << n));
        for (const PointedMap& p : cc) CHECK(is_pointed_fib(p));
        // every fibration factors as (iso) o (canonical collapse)
        for (int k = 0; k <= n; ++k)
            for (const PointedMap& p : all_pointed_fibs(n, k)) {
                bool found = false;
                for (const PointedMap& c0 : cc) {
                    if (c0.dst != k) continue;
                    for (const PointedMap& s : all_pointed_monos(k, k))
                        if (compose_pointed(c0, s) == p) found = true;
                }
                CHECK(found);
            }
    }
}

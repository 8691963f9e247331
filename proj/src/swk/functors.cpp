#include "swk/functors.hpp"

#include <map>

namespace swk {

namespace {

std::string slot(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// one object per canonical label among the in-bound objects
std::vector<ObjId> class_reps(ConcreteSetInstance& c, int bound) {
    std::vector<ObjId> reps;
    std::map<std::string, bool> seen;
    for (ObjId x : c.objects_within(bound)) {
        std::string key = c.canonical_label(x);
        if (seen.emplace(key, true).second) reps.push_back(x);
    }
    return reps;
}

}  // namespace

// --- W-exact functor ---------------------------------------------------------

int WExactToFinSet::on_object(ObjId x) { return c_.object_size(x); }

PointedMap WExactToFinSet::on_cof(MorId i) {
    if (!c_.is_cof(i)) throw StructuralError("on_cof: not a cofibration");
    const auto& m = c_.map_of(i);
    PointedMap out;
    out.src = on_object(c_.mor_src(i));
    out.dst = on_object(c_.mor_dst(i));
    out.map.assign(out.src + 1, 0);
    for (int r = 0; r < (int)m.size(); ++r) out.map[r + 1] = m[r] + 1;
    return out;
}

PointedMap WExactToFinSet::on_fib(MorId j) {
    if (!c_.is_fib(j)) throw StructuralError("on_fib: not a fibration");
    return wrongway_cof(on_cof(j));
}

std::unique_ptr<WExactToFinSet> point_count_functor(ConcreteSetInstance& c) {
    return std::make_unique<WExactToFinSet>(c);
}

CheckReport check_w_exact(WExactToFinSet& f, int bound) {
    CheckReport rep;
    ConcreteSetInstance& c = f.source();
    auto objs = c.objects_within(bound);

    // condition 3 sanity: single object value, empty on the initial object
    if (f.on_object(c.initial_object()) != 0)
        rep.add("w-exact objects", "the initial object is not sent to [0]+");

    // conditions 1-2: identities
    for (ObjId x : objs) {
        ++rep.configurations;
        MorId id = c.identity(x);
        if (f.on_cof(id) != PointedMap::identity(f.on_object(x)))
            rep.add("w-exact functoriality",
                    "F_! of the identity of " + c.object_label(x));
        if (f.on_fib(id) != PointedMap::identity(f.on_object(x)))
            rep.add("w-exact functoriality",
                    "F^! of the identity of " + c.object_label(x));
    }
    // conditions 1-2: composition, over class-representative triples
    auto reps = class_reps(c, bound);
    for (ObjId a : reps)
        for (ObjId b : reps)
            for (ObjId z : reps)
                for (MorId m1 : c.hom(a, b))
                    for (MorId m2 : c.hom(b, z)) {
                        ++rep.configurations;
                        MorId m = c.compose(m1, m2);
                        if (c.is_cof(m1) && c.is_cof(m2) &&
                            f.on_cof(m) !=
                                compose_pointed(f.on_cof(m1), f.on_cof(m2)))
                            rep.add("w-exact functoriality",
                                    "F_! breaks composition " +
                                        c.object_label(a) + " -> " +
                                        c.object_label(b) + " -> " +
                                        c.object_label(z));
                        if (c.is_fib(m1) && c.is_fib(m2) &&
                            f.on_fib(m) !=
                                compose_pointed(f.on_fib(m2), f.on_fib(m1)))
                            rep.add("w-exact functoriality",
                                    "F^! breaks composition " +
                                        c.object_label(a) + " -> " +
                                        c.object_label(b) + " -> " +
                                        c.object_label(z));
                    }

    // condition 4: base change over pulled-back (cof, fib) squares
    for (ObjId w : objs)
        for (MorId ip : c.cof_subobject_reps(w))       // i': Z >-> W
            for (MorId jp : c.fib_into_reps(w)) {      // j': Y -> W
                auto pb = c.pullback(ip, jp);
                if (!pb) continue;
                ++rep.configurations;
                MorId j = pb->to_left;   // X -> Z, fibration
                MorId i = pb->to_right;  // X >-> Y
                if (!c.is_cartesian(j, i, ip, jp)) {
                    rep.add("w-exact base change",
                            "chosen pullback square over " +
                                c.object_label(w) + " is not cartesian");
                    continue;
                }
                PointedMap lhs = compose_pointed(f.on_fib(j), f.on_cof(i));
                PointedMap rhs = compose_pointed(f.on_cof(ip), f.on_fib(jp));
                if (lhs != rhs)
                    rep.add("w-exact base change",
                            "i_! j^! != (j')^! (i')_! over " +
                                c.object_label(w));
            }

    // condition 5: excision
    for (ObjId x : objs)
        for (MorId cf : c.cof_subobject_reps(x)) {
            auto tri = c.subtraction(cf);
            if (!tri) continue;
            ++rep.configurations;
            if (!is_cofiber_sequence(f.on_cof(cf), f.on_fib(tri->leg)))
                rep.add("w-exact excision",
                        "subtraction triple into " + c.object_label(x) +
                            " does not map to a cofiber sequence");
        }
    rep.normalize();
    return rep;
}

// --- op-W-exact functor --------------------------------------------------------

OpWExactFromFinSet::OpWExactFromFinSet(ConcreteSetInstance& c, int max_size)
    : c_(c), max_size_(max_size) {
    for (int a = 0; a < c.universe_size(); ++a) {
        bool fixed = true;
        if (c.has_group())
            for (int g = 0; g < c.group()->order; ++g)
                fixed = fixed && c.act(g, a) == a;
        if (fixed) fixed_atoms_.push_back(a);
    }
    if ((int)fixed_atoms_.size() < max_size)
        throw StructuralError(
            "unit functor: not enough fixed points in the instance");
    Mask m = 0;
    objects_.push_back(c.initial_object());
    for (int n = 1; n <= max_size; ++n) {
        m |= Mask(1) << fixed_atoms_[n - 1];
        objects_.push_back(c.require_object(m));
    }
}

ObjId OpWExactFromFinSet::on_object(int n) const {
    if (n < 0 || n > max_size_)
        throw StructuralError("unit functor: size out of range");
    return objects_[n];
}

MorId OpWExactFromFinSet::mono_to_mor(const PointedMap& i) {
    // objects_[n] consists of the first n fixed atoms in ascending order,
    // so pointed ranks translate to atom ranks directly
    std::vector<uint8_t> m(i.src);
    for (int k = 1; k <= i.src; ++k) m[k - 1] = (uint8_t)(i.map[k] - 1);
    return c_.mor(on_object(i.src), on_object(i.dst), m);
}

MorId OpWExactFromFinSet::on_cof(const PointedMap& i) {
    if (!is_pointed_mono(i))
        throw StructuralError("unit functor: G_* needs a monomorphism");
    return mono_to_mor(i);
}

MorId OpWExactFromFinSet::on_fib(const PointedMap& p) {
    return mono_to_mor(wrongway_fib(p));
}

std::unique_ptr<OpWExactFromFinSet> unit_functor(ConcreteSetInstance& c,
                                                 int max_size) {
    return std::make_unique<OpWExactFromFinSet>(c, max_size);
}

CheckReport check_op_w_exact(OpWExactFromFinSet& g, int bound) {
    CheckReport rep;
    ConcreteSetInstance& c = g.target();
    if (bound > g.max_size())
        throw StructuralError("op-w-exact check: bound exceeds the functor");
    if (g.on_object(0) != c.initial_object())
        rep.add("op-w-exact objects", "[0]+ is not sent to the initial object");

    // condition 1: G_* functorial on monomorphisms
    for (int n = 0; n <= bound; ++n) {
        ++rep.configurations;
        if (g.on_cof(PointedMap::identity(n)) != c.identity(g.on_object(n)))
            rep.add("op-w-exact functoriality",
                    "G_* of the identity of [" + std::to_string(n) + "]+");
    }
    for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = n1; n2 <= bound; ++n2) {
            auto first = all_pointed_monos(n1, n2);
            std::vector<MorId> gfirst;
            for (const PointedMap& i1 : first) gfirst.push_back(g.on_cof(i1));
            for (int n3 = n2; n3 <= bound; ++n3)
                for (const PointedMap& i2 : all_pointed_monos(n2, n3)) {
                    MorId gi2 = g.on_cof(i2);
                    for (size_t a = 0; a < first.size(); ++a) {
                        ++rep.configurations;
                        if (g.on_cof(compose_pointed(first[a], i2)) !=
                            c.compose(gfirst[a], gi2))
                            rep.add("op-w-exact functoriality",
                                    "G_* breaks composition " +
                                        first[a].to_string() + " ; " +
                                        i2.to_string());
                    }
                }
        }

    // condition 2: G^* contravariant on fibrations
    for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = 0; n2 <= n1; ++n2) {
            auto first = all_pointed_fibs(n1, n2);
            std::vector<MorId> gfirst;
            for (const PointedMap& p1 : first) gfirst.push_back(g.on_fib(p1));
            for (int n3 = 0; n3 <= n2; ++n3)
                for (const PointedMap& p2 : all_pointed_fibs(n2, n3)) {
                    MorId gp2 = g.on_fib(p2);
                    for (size_t a = 0; a < first.size(); ++a) {
                        ++rep.configurations;
                        if (g.on_fib(compose_pointed(first[a], p2)) !=
                            c.compose(gp2, gfirst[a]))
                            rep.add("op-w-exact functoriality",
                                    "G^* breaks composition " +
                                        first[a].to_string() + " ; " +
                                        p2.to_string());
                    }
                }
        }

    // condition 4: base change on commuting (cof, fib) squares.  Exhaustive
    // while every corner has size <= 4; above that the fibrations range
    // over canonical collapses (any fibration is an isomorphism followed
    // by a collapse).
    for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = n1; n2 <= bound; ++n2) {
            bool small = n2 <= 4;
            auto js = small ? [&] {
                std::vector<PointedMap> all;
                for (int n3 = 0; n3 <= n1; ++n3)
                    for (auto& p : all_pointed_fibs(n1, n3))
                        all.push_back(p);
                return all;
            }()
                            : canonical_collapses(n1);
            auto jps = small ? [&] {
                std::vector<PointedMap> all;
                for (int n4 = 0; n4 <= n2; ++n4)
                    for (auto& p : all_pointed_fibs(n2, n4))
                        all.push_back(p);
                return all;
            }()
                             : canonical_collapses(n2);
            std::vector<MorId> gjps;
            for (const PointedMap& jp : jps) gjps.push_back(g.on_fib(jp));
            for (const PointedMap& i : all_pointed_monos(n1, n2)) {
                MorId gi = g.on_cof(i);
                for (const PointedMap& j : js) {
                    MorId lhs = c.compose(g.on_fib(j), gi);
                    for (size_t b = 0; b < jps.size(); ++b) {
                        const PointedMap& jp = jps[b];
                        // the bottom monomorphism is forced by commutation
                        PointedMap ip;
                        ip.src = j.dst;
                        ip.dst = jp.dst;
                        ip.map.assign(j.dst + 1, 0);
                        bool commutes = true;
                        for (int x = 1; x <= n1 && commutes; ++x) {
                            int lo = j.map[x], hi = jp.map[i.map[x]];
                            if (lo == 0)
                                commutes = hi == 0;
                            else
                                ip.map[lo] = hi;
                        }
                        if (!commutes || !is_pointed_mono(ip)) continue;
                        ++rep.configurations;
                        MorId rhs = c.compose(g.on_cof(ip), gjps[b]);
                        if (lhs != rhs)
                            rep.add("op-w-exact base change",
                                    "i_* j^* != (j')^* (i')_* for i=" +
                                        i.to_string() + " j=" + j.to_string() +
                                        " j'=" + jp.to_string());
                    }
                }
            }
        }

    // condition 5: cofiber sequences map to subtraction sequences
    for (int n2 = 0; n2 <= bound; ++n2) {
        std::vector<PointedMap> quots;
        std::vector<MorId> gquots;
        for (int n3 = 0; n3 <= n2; ++n3)
            for (const PointedMap& q : all_pointed_fibs(n2, n3)) {
                quots.push_back(q);
                gquots.push_back(g.on_fib(q));
            }
        for (int n1 = 0; n1 <= n2; ++n1)
            for (const PointedMap& i : all_pointed_monos(n1, n2)) {
                MorId gi = g.on_cof(i);
                for (size_t b = 0; b < quots.size(); ++b) {
                    if (!is_cofiber_sequence(i, quots[b])) continue;
                    ++rep.configurations;
                    if (!c.is_subtraction_triple(gi, gquots[b]))
                        rep.add("op-w-exact excision",
                                "cofiber sequence " + i.to_string() + " ; " +
                                    quots[b].to_string() +
                                    " is not sent to a subtraction sequence");
                }
            }
    }
    rep.normalize();
    return rep;
}

// --- splitting ----------------------------------------------------------------

SplittingReport check_splitting(OpWExactFromFinSet& g, WExactToFinSet& f,
                                int bound) {
    SplittingReport out;
    out.strict = true;
    out.up_to_iso = true;
    auto H_cof = [&](const PointedMap& i) { return f.on_cof(g.on_cof(i)); };
    auto H_fib = [&](const PointedMap& p) { return f.on_fib(g.on_fib(p)); };

    // objects, and the relabeling forced by the elements [1]+ -> [n]+
    std::vector<PointedMap> sigma(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        ++out.report.configurations;
        if (f.on_object(g.on_object(n)) != n) {
            out.report.add("splitting objects",
                           "composite changes the size of [" +
                               std::to_string(n) + "]+");
            out.strict = out.up_to_iso = false;
            continue;
        }
        PointedMap& s = sigma[n];
        s.src = s.dst = n;
        s.map.assign(n + 1, 0);
        for (int k = 1; k <= n; ++k) {
            PointedMap ek;
            ek.src = 1;
            ek.dst = n;
            ek.map = {0, k};
            int v = H_cof(ek).map[1];
            if (v < 1 || v > n || s.map[v] != 0) {
                out.report.add("splitting relabeling",
                               "element map of [" + std::to_string(n) +
                                   "]+ is not a bijection");
                out.up_to_iso = false;
                v = 0;
            }
            if (v) s.map[v] = k;
        }
    }
    if (!out.up_to_iso) {
        out.strict = false;
        out.report.normalize();
        return out;
    }

    for (int n1 = 0; n1 <= bound; ++n1)
        for (int n2 = 0; n2 <= bound; ++n2) {
            for (const PointedMap& i : all_pointed_monos(n1, n2)) {
                ++out.report.configurations;
                PointedMap h = H_cof(i);
                if (h != i) {
                    out.strict = false;
                    // naturality: h . sigma_{n1} = sigma_{n2} . i, i.e.
                    // sigma_{n1} ; h  ==  i ; sigma_{n2}
                    if (compose_pointed(sigma[n1], h) !=
                        compose_pointed(i, sigma[n2])) {
                        out.up_to_iso = false;
                        out.report.add("splitting cofibrations",
                                       "composite differs beyond relabeling "
                                       "on " + i.to_string());
                    }
                }
            }
            for (const PointedMap& p : all_pointed_fibs(n1, n2)) {
                ++out.report.configurations;
                PointedMap h = H_fib(p);
                if (h != p) {
                    out.strict = false;
                    if (compose_pointed(sigma[n1], h) !=
                        compose_pointed(p, sigma[n2])) {
                        out.up_to_iso = false;
                        out.report.add("splitting fibrations",
                                       "composite differs beyond relabeling "
                                       "on " + p.to_string());
                    }
                }
            }
        }
    out.report.normalize();
    return out;
}

SplittingReport check_splitting(ConcreteSetInstance& c, int bound) {
    auto g = unit_functor(c, bound);
    auto f = point_count_functor(c);
    return check_splitting(*g, *f, bound);
}

// --- induced flags --------------------------------------------------------------

WFlag induced_flag_map(WExactToFinSet& f, const Flag& x) {
    ConcreteSetInstance& c = f.source();
    WFlag w;
    w.n = x.n;
    w.obj.assign(x.n + 1, std::vector<int>(x.n + 1, 0));
    w.h.assign(x.n + 1, std::vector<PointedMap>(x.n + 1));
    w.q = w.h;
    for (int i = 0; i <= x.n; ++i)
        for (int j = i; j <= x.n; ++j) {
            w.obj[i][j] = f.on_object(x.obj[i][j]);
            if (j < x.n) w.h[i][j] = f.on_cof(x.h[i][j]);
        }
    for (int i = 0; i < x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j) w.q[i][j] = f.on_fib(x.v[i][j]);
    (void)c;
    return w;
}

namespace {

PointedMap wflag_row(const WFlag& w, int i, int j, int k) {
    PointedMap m = PointedMap::identity(w.obj[i][j]);
    for (int t = j; t < k; ++t) m = compose_pointed(m, w.h[i][t]);
    return m;
}

// quotient F(X_{i,k}) -> F(X_{j,k})
PointedMap wflag_quot(const WFlag& w, int i, int j, int k) {
    PointedMap m = PointedMap::identity(w.obj[i][k]);
    for (int t = i; t < j; ++t) m = compose_pointed(m, w.q[t][k]);
    return m;
}

}  // namespace

CheckReport validate_wflag(const WFlag& w) {
    CheckReport rep;
    const int n = w.n;
    if (n < 0 || (int)w.obj.size() != n + 1) {
        rep.add("wflag shape", "bad degree/storage");
        return rep;
    }
    for (int i = 0; i <= n; ++i)
        if (w.obj[i][i] != 0)
            rep.add("wflag shape",
                    "diagonal slot " + slot(i, i) + " is not the basepoint");
    if (!rep.ok()) return rep;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j) {
            ++rep.configurations;
            const PointedMap& m = w.h[i][j];
            if (m.src != w.obj[i][j] || m.dst != w.obj[i][j + 1])
                rep.add("wflag shape", "bad row map at " + slot(i, j));
            else if (!is_pointed_mono(m))
                rep.add("wflag rows",
                        "row map at " + slot(i, j) + " is not a mono");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ++rep.configurations;
            const PointedMap& m = w.q[i][j];
            if (m.src != w.obj[i][j] || m.dst != w.obj[i + 1][j])
                rep.add("wflag shape", "bad quotient map at " + slot(i, j));
        }
    if (!rep.ok()) return rep;

    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                ++rep.configurations;
                if (!is_cofiber_sequence(wflag_row(w, i, j, k),
                                         wflag_quot(w, i, j, k)))
                    rep.add("wflag cofiber sequences",
                            "slots " + slot(i, j) + " -> " + slot(i, k) +
                                " -> " + slot(j, k));
            }
    // rows commute with quotients
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ++rep.configurations;
            if (compose_pointed(w.h[i][j], w.q[i][j + 1]) !=
                compose_pointed(w.q[i][j], w.h[i + 1][j]))
                rep.add("wflag squares",
                        "row/quotient square at " + slot(i, j) +
                            " does not commute");
        }
    rep.normalize();
    return rep;
}

WFlag wface(const WFlag& w, int k) {
    if (w.n < 1 || k < 0 || k > w.n)
        throw StructuralError("wface: index out of range");
    const int n = w.n - 1;
    auto sigma = [&](int i) { return i < k ? i : i + 1; };
    WFlag out;
    out.n = n;
    out.obj.assign(n + 1, std::vector<int>(n + 1, 0));
    out.h.assign(n + 1, std::vector<PointedMap>(n + 1));
    out.q = out.h;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.obj[i][j] = w.obj[sigma(i)][sigma(j)];
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j)
            out.h[i][j] = sigma(j + 1) == sigma(j) + 1
                              ? w.h[sigma(i)][sigma(j)]
                              : compose_pointed(w.h[sigma(i)][sigma(j)],
                                                w.h[sigma(i)][sigma(j) + 1]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.q[i][j] = sigma(i + 1) == sigma(i) + 1
                              ? w.q[sigma(i)][sigma(j)]
                              : compose_pointed(w.q[sigma(i)][sigma(j)],
                                                w.q[sigma(i) + 1][sigma(j)]);
    return out;
}

WFlag wdegeneracy(const WFlag& w, int k) {
    if (w.n < 0 || k < 0 || k > w.n)
        throw StructuralError("wdegeneracy: index out of range");
    const int n = w.n + 1;
    auto sigma = [&](int i) { return i <= k ? i : i - 1; };
    WFlag out;
    out.n = n;
    out.obj.assign(n + 1, std::vector<int>(n + 1, 0));
    out.h.assign(n + 1, std::vector<PointedMap>(n + 1));
    out.q = out.h;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.obj[i][j] = w.obj[sigma(i)][sigma(j)];
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j)
            out.h[i][j] = sigma(j + 1) == sigma(j)
                              ? PointedMap::identity(out.obj[i][j])
                              : w.h[sigma(i)][sigma(j)];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.q[i][j] = sigma(i + 1) == sigma(i)
                              ? PointedMap::identity(out.obj[i][j])
                              : w.q[sigma(i)][sigma(j)];
    return out;
}

}  // namespace swk

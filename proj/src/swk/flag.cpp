#include "swk/flag.hpp"

#include <string>

namespace swk {

namespace {

std::vector<std::vector<ObjId>> obj_grid(int n) {
    return std::vector<std::vector<ObjId>>(n + 1,
                                           std::vector<ObjId>(n + 1, kNoObj));
}
std::vector<std::vector<MorId>> mor_grid(int n) {
    return std::vector<std::vector<MorId>>(n + 1,
                                           std::vector<MorId>(n + 1, kNoMor));
}

std::string slot(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

MorId flag_row_mor(SwCategory& c, const Flag& f, int i, int j, int k) {
    MorId m = c.identity(f.obj[i][j]);
    for (int t = j; t < k; ++t) m = c.compose(m, f.h[i][t]);
    return m;
}

MorId flag_leg_mor(SwCategory& c, const Flag& f, int i, int j, int k) {
    MorId m = c.identity(f.obj[j][k]);
    for (int t = j - 1; t >= i; --t) m = c.compose(m, f.v[t][k]);
    return m;
}

CheckReport validate_flag(SwCategory& c, const Flag& f) {
    CheckReport rep;
    const int n = f.n;
    if (n < 0 || (int)f.obj.size() != n + 1) {
        rep.add("flag shape", "bad degree/storage");
        return rep;
    }
    const ObjId init = c.initial_object();
    for (int i = 0; i <= n; ++i) {
        if (f.obj[i][i] != init)
            rep.add("flag shape", "diagonal slot " + slot(i, i) +
                                      " is not the initial object");
        for (int j = i; j <= n; ++j)
            if (f.obj[i][j] == kNoObj)
                rep.add("flag shape", "missing object at " + slot(i, j));
    }
    if (!rep.ok()) return rep;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j) {
            MorId m = f.h[i][j];
            ++rep.configurations;
            if (m == kNoMor || c.mor_src(m) != f.obj[i][j] ||
                c.mor_dst(m) != f.obj[i][j + 1])
                rep.add("flag shape", "bad horizontal generator at " +
                                          slot(i, j));
            else if (!c.is_cof(m))
                rep.add("flag rows", "row map at " + slot(i, j) +
                                         " is not a cofibration");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            MorId m = f.v[i][j];
            ++rep.configurations;
            if (m == kNoMor || c.mor_src(m) != f.obj[i + 1][j] ||
                c.mor_dst(m) != f.obj[i][j])
                rep.add("flag shape", "bad leg generator at " + slot(i, j));
        }
    if (!rep.ok()) return rep;

    // Triples X_{i,j} >-> X_{i,k} <- X_{j,k}.
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                ++rep.configurations;
                if (!c.is_subtraction_triple(flag_row_mor(c, f, i, j, k),
                                             flag_leg_mor(c, f, i, j, k)))
                    rep.add("flag triples",
                            "slots " + slot(i, j) + " >-> " + slot(i, k) +
                                " <- " + slot(j, k) +
                                " are not a subtraction sequence");
            }

    // Comparison squares cartesian.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j; k < n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    ++rep.configurations;
                    if (!c.is_cartesian(flag_leg_mor(c, f, i, j, k),
                                        flag_row_mor(c, f, j, k, l),
                                        flag_row_mor(c, f, i, k, l),
                                        flag_leg_mor(c, f, i, j, l)))
                        rep.add("flag squares",
                                "square at rows " + std::to_string(i) + "," +
                                    std::to_string(j) + " columns " +
                                    std::to_string(k) + "," +
                                    std::to_string(l) + " is not cartesian");
                }
    rep.normalize();
    return rep;
}

Flag face(SwCategory& c, const Flag& f, int k) {
    if (f.n < 1 || k < 0 || k > f.n)
        throw StructuralError("face: index out of range");
    const int n = f.n - 1;
    auto sigma = [&](int i) { return i < k ? i : i + 1; };
    Flag out;
    out.n = n;
    out.obj = obj_grid(n);
    out.h = mor_grid(n);
    out.v = mor_grid(n);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.obj[i][j] = f.obj[sigma(i)][sigma(j)];
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j)
            out.h[i][j] =
                sigma(j + 1) == sigma(j) + 1
                    ? f.h[sigma(i)][sigma(j)]
                    : c.compose(f.h[sigma(i)][sigma(j)],
                                f.h[sigma(i)][sigma(j) + 1]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.v[i][j] = sigma(i + 1) == sigma(i) + 1
                              ? f.v[sigma(i)][sigma(j)]
                              : c.compose(f.v[sigma(i) + 1][sigma(j)],
                                          f.v[sigma(i)][sigma(j)]);
    return out;
}

Flag degeneracy(SwCategory& c, const Flag& f, int k) {
    if (f.n < 0 || k < 0 || k > f.n)
        throw StructuralError("degeneracy: index out of range");
    const int n = f.n + 1;
    auto sigma = [&](int i) { return i <= k ? i : i - 1; };
    Flag out;
    out.n = n;
    out.obj = obj_grid(n);
    out.h = mor_grid(n);
    out.v = mor_grid(n);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.obj[i][j] = f.obj[sigma(i)][sigma(j)];
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j)
            out.h[i][j] = sigma(j + 1) == sigma(j)
                              ? c.identity(out.obj[i][j])
                              : f.h[sigma(i)][sigma(j)];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.v[i][j] = sigma(i + 1) == sigma(i)
                              ? c.identity(out.obj[i][j])
                              : f.v[sigma(i)][sigma(j)];
    return out;
}

Flag flag_from_top_row(ConcreteSetInstance& c,
                       const std::vector<ObjId>& tops) {
    if (tops.empty()) throw StructuralError("flag: empty top row");
    if (tops[0] != c.initial_object())
        throw StructuralError("flag: top row must start at the initial object");
    const int n = (int)tops.size() - 1;
    for (int j = 0; j < n; ++j)
        if (c.mask_of(tops[j]) & ~c.mask_of(tops[j + 1]))
            throw StructuralError("flag: top row is not an ascending chain");
    Flag f;
    f.n = n;
    f.obj = obj_grid(n);
    f.h = mor_grid(n);
    f.v = mor_grid(n);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            f.obj[i][j] =
                c.require_object(c.mask_of(tops[j]) & ~c.mask_of(tops[i]));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j < n; ++j)
            f.h[i][j] = c.inclusion(f.obj[i][j], f.obj[i][j + 1]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            f.v[i][j] = c.inclusion(f.obj[i + 1][j], f.obj[i][j]);
    return f;
}

std::vector<Flag> enumerate_flags(ConcreteSetInstance& c, int degree) {
    std::vector<Flag> out;
    std::vector<ObjId> tops{c.initial_object()};
    auto rec = [&](auto&& self) -> void {
        if ((int)tops.size() == degree + 1) {
            out.push_back(flag_from_top_row(c, tops));
            return;
        }
        const Mask prev = c.mask_of(tops.back());
        for (ObjId x = 0; x < c.object_count(); ++x)
            if ((prev & ~c.mask_of(x)) == 0) {
                tops.push_back(x);
                self(self);
                tops.pop_back();
            }
    };
    rec(rec);
    return out;
}

BiFlag biflag_from_chains(ConcreteSetInstance& c,
                          const std::vector<ObjId>& topsA,
                          const std::vector<ObjId>& topsB) {
    if (topsA.empty() || topsB.empty())
        throw StructuralError("biflag: empty chain");
    if (topsA[0] != c.initial_object() || topsB[0] != c.initial_object())
        throw StructuralError("biflag: chains must start at the initial object");
    const int m = (int)topsA.size() - 1, n = (int)topsB.size() - 1;
    BiFlag bf;
    bf.m = m;
    bf.n = n;
    auto dims4o = std::vector<std::vector<std::vector<std::vector<ObjId>>>>(
        m + 1, std::vector<std::vector<std::vector<ObjId>>>(
                   m + 1, std::vector<std::vector<ObjId>>(
                              n + 1, std::vector<ObjId>(n + 1, kNoObj))));
    auto dims4m = std::vector<std::vector<std::vector<std::vector<MorId>>>>(
        m + 1, std::vector<std::vector<std::vector<MorId>>>(
                   m + 1, std::vector<std::vector<MorId>>(
                              n + 1, std::vector<MorId>(n + 1, kNoMor))));
    bf.obj = dims4o;
    bf.hA = dims4m;
    bf.vA = dims4m;
    bf.hB = dims4m;
    bf.vB = dims4m;
    auto maskA = [&](int i, int j) {
        return c.mask_of(topsA[j]) & ~c.mask_of(topsA[i]);
    };
    auto maskB = [&](int k, int l) {
        return c.mask_of(topsB[l]) & ~c.mask_of(topsB[k]);
    };
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            for (int k = 0; k <= n; ++k)
                for (int l = k; l <= n; ++l)
                    bf.obj[i][j][k][l] =
                        c.require_object(maskA(i, j) & maskB(k, l));
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            for (int k = 0; k <= n; ++k)
                for (int l = k; l <= n; ++l) {
                    if (j < m)
                        bf.hA[i][j][k][l] = c.inclusion(
                            bf.obj[i][j][k][l], bf.obj[i][j + 1][k][l]);
                    if (i < j)
                        bf.vA[i][j][k][l] = c.inclusion(
                            bf.obj[i + 1][j][k][l], bf.obj[i][j][k][l]);
                    if (l < n)
                        bf.hB[i][j][k][l] = c.inclusion(
                            bf.obj[i][j][k][l], bf.obj[i][j][k][l + 1]);
                    if (k < l)
                        bf.vB[i][j][k][l] = c.inclusion(
                            bf.obj[i][j][k + 1][l], bf.obj[i][j][k][l]);
                }
    return bf;
}

CheckReport validate_biflag(SwCategory& c, const BiFlag& bf) {
    CheckReport rep;
    const int m = bf.m, n = bf.n;
    const ObjId init = c.initial_object();
    // 1. basepoints on both diagonals
    for (int i = 0; i <= m; ++i)
        for (int k = 0; k <= n; ++k)
            for (int l = k; l <= n; ++l) {
                ++rep.configurations;
                if (bf.obj[i][i][k][l] != init)
                    rep.add("biflag basepoints",
                            "slot " + slot(i, i) + "x" + slot(k, l) +
                                " is not the initial object");
            }
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                ++rep.configurations;
                if (bf.obj[i][j][k][k] != init)
                    rep.add("biflag basepoints",
                            "slot " + slot(i, j) + "x" + slot(k, k) +
                                " is not the initial object");
            }
    if (!rep.ok()) {
        rep.normalize();
        return rep;
    }

    // 2/3. flag slices in both directions
    for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Flag s;
            s.n = m;
            s.obj = std::vector<std::vector<ObjId>>(m + 1,
                                                    std::vector<ObjId>(m + 1, kNoObj));
            s.h = std::vector<std::vector<MorId>>(m + 1,
                                                  std::vector<MorId>(m + 1, kNoMor));
            s.v = s.h;
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j) {
                    s.obj[i][j] = bf.obj[i][j][k][l];
                    if (j < m) s.h[i][j] = bf.hA[i][j][k][l];
                    if (i < j) s.v[i][j] = bf.vA[i][j][k][l];
                }
            auto r = validate_flag(c, s);
            rep.configurations += r.configurations;
            for (auto& viol : r.violations)
                rep.add("biflag slice A at " + slot(k, l),
                        "[" + viol.axiom + "] " + viol.detail);
        }
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Flag s;
            s.n = n;
            s.obj = std::vector<std::vector<ObjId>>(n + 1,
                                                    std::vector<ObjId>(n + 1, kNoObj));
            s.h = std::vector<std::vector<MorId>>(n + 1,
                                                  std::vector<MorId>(n + 1, kNoMor));
            s.v = s.h;
            for (int k = 0; k <= n; ++k)
                for (int l = k; l <= n; ++l) {
                    s.obj[k][l] = bf.obj[i][j][k][l];
                    if (l < n) s.h[k][l] = bf.hB[i][j][k][l];
                    if (k < l) s.v[k][l] = bf.vB[i][j][k][l];
                }
            auto r = validate_flag(c, s);
            rep.configurations += r.configurations;
            for (auto& viol : r.violations)
                rep.add("biflag slice B at " + slot(i, j),
                        "[" + viol.axiom + "] " + viol.detail);
        }

    // 4. mixed squares cartesian
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            for (int k = 0; k <= n; ++k)
                for (int l = k; l <= n; ++l) {
                    if (j < m && l < n) {
                        ++rep.configurations;
                        if (!c.is_cartesian(bf.hA[i][j][k][l],
                                            bf.hB[i][j][k][l],
                                            bf.hB[i][j + 1][k][l],
                                            bf.hA[i][j][k][l + 1]))
                            rep.add("biflag mixed squares",
                                    "row-row square at " + slot(i, j) + "x" +
                                        slot(k, l) + " is not cartesian");
                    }
                    if (i < j && l < n) {
                        ++rep.configurations;
                        if (!c.is_cartesian(bf.vA[i][j][k][l],
                                            bf.hB[i + 1][j][k][l],
                                            bf.hB[i][j][k][l],
                                            bf.vA[i][j][k][l + 1]))
                            rep.add("biflag mixed squares",
                                    "leg-row square at " + slot(i, j) + "x" +
                                        slot(k, l) + " is not cartesian");
                    }
                    if (j < m && k < l) {
                        ++rep.configurations;
                        if (!c.is_cartesian(bf.vB[i][j][k][l],
                                            bf.hA[i][j][k + 1][l],
                                            bf.hA[i][j][k][l],
                                            bf.vB[i][j + 1][k][l]))
                            rep.add("biflag mixed squares",
                                    "row-leg square at " + slot(i, j) + "x" +
                                        slot(k, l) + " is not cartesian");
                    }
                    if (i < j && k < l) {
                        ++rep.configurations;
                        if (!c.is_cartesian(bf.vA[i][j][k + 1][l],
                                            bf.vB[i + 1][j][k][l],
                                            bf.vB[i][j][k][l],
                                            bf.vA[i][j][k][l]))
                            rep.add("biflag mixed squares",
                                    "leg-leg square at " + slot(i, j) + "x" +
                                        slot(k, l) + " is not cartesian");
                    }
                }
    rep.normalize();
    return rep;
}

}  // namespace swk

#include "swk/additivity.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <string>

namespace swk {

namespace {

Flag blank_flag(int n) {
    Flag f;
    f.n = n;
    f.obj.assign(n + 1, std::vector<ObjId>(n + 1, kNoObj));
    f.h.assign(n + 1, std::vector<MorId>(n + 1, kNoMor));
    f.v.assign(n + 1, std::vector<MorId>(n + 1, kNoMor));
    return f;
}

std::string slot(int k, int l) {
    return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// S_0 - A_k: canonical complement of the row map A_k -> S_0 of the
// Z-level flag.
ObjId sa_object(ConcreteSetInstance& c, const Flag& s, int m, int k) {
    auto tri = c.subtraction(flag_row_mor(c, s, 0, k, m + 1));
    if (!tri)
        throw StructuralError("homotopy: no canonical subtraction for " +
                              c.object_label(s.obj[0][k]) + " inside " +
                              c.object_label(s.obj[0][m + 1]));
    return tri->complement;
}

struct ApexData {
    PushoutResult po;
    MorId left = kNoMor;   // A_{k,l-1} -> C_{k,l-1}
    MorId right = kNoMor;  // A_{k,l-1} -> S_0 - A_k
    ObjId zp = kNoObj;     // image of from_right inside the apex
};

// Inverse of from_right on its image: the fresh copy of S_0 - A_k back
// to the literal one.
MorId unembed(ConcreteSetInstance& c, const PushoutResult& po, ObjId sa,
              ObjId zp) {
    const auto& za = c.atoms_of(zp);
    const auto& sat = c.atoms_of(sa);
    std::vector<uint8_t> map(za.size(), 0);
    for (size_t r = 0; r < sat.size(); ++r) {
        int img = c.apply_atom(po.from_right, sat[r]);
        auto it = std::lower_bound(za.begin(), za.end(), img);
        map[(size_t)(it - za.begin())] = (uint8_t)r;
    }
    return c.mor(zp, sa, map);
}

void merge_report(CheckReport& into, const CheckReport& from,
                  const std::string& prefix) {
    for (const auto& v : from.violations)
        into.add(prefix + v.axiom, v.detail);
    into.configurations += from.configurations;
}

}  // namespace

CheckReport validate_add_element(F1PlusInstance& fp, const AddElement& e) {
    CheckReport rep;
    ConcreteSetInstance& c = fp.base();
    if (e.m < 0 || e.n < 0 || e.f1.n != e.m || e.s.n != e.m + e.n + 1 ||
        e.t.n != e.s.n) {
        rep.add("element shape", "bidegree does not match the flag degrees");
        return rep;
    }
    merge_report(rep, validate_flag(fp, e.f1), "pair flag: ");
    merge_report(rep, validate_flag(c, e.s), "Z-level flag: ");
    merge_report(rep, validate_flag(c, e.t), "complement flag: ");
    for (int k = 0; k <= e.m; ++k)
        for (int l = k; l <= e.m; ++l) {
            ++rep.configurations;
            if (fp.s_obj(e.f1.obj[k][l]) != e.s.obj[k][l] ||
                fp.q_obj(e.f1.obj[k][l]) != e.t.obj[k][l])
                rep.add("compatibility",
                        "projections disagree at slot " + slot(k, l));
            if (l < e.m && (fp.s_mor(e.f1.h[k][l]) != e.s.h[k][l] ||
                            fp.q_mor(e.f1.h[k][l]) != e.t.h[k][l]))
                rep.add("compatibility",
                        "row maps disagree at slot " + slot(k, l));
            if (k < l && (fp.s_mor(e.f1.v[k][l]) != e.s.v[k][l] ||
                          fp.q_mor(e.f1.v[k][l]) != e.t.v[k][l]))
                rep.add("compatibility",
                        "legs disagree at slot " + slot(k, l));
        }
    rep.normalize();
    return rep;
}

Flag f1_flag_from_chain(F1PlusInstance& fp, const std::vector<ObjId>& chain) {
    ConcreteSetInstance& c = fp.base();
    if (chain.empty() || chain[0] != fp.initial_object())
        throw StructuralError("pair chain must start at the initial pair");
    const int m = (int)chain.size() - 1;
    std::vector<Mask> xm(m + 1), zm(m + 1);
    for (int j = 0; j <= m; ++j) {
        auto [x, z] = fp.pair_of(chain[j]);
        xm[j] = c.mask_of(x);
        zm[j] = c.mask_of(z);
    }
    for (int j = 0; j < m; ++j) {
        if (xm[j] & ~xm[j + 1])
            throw StructuralError("pair chain is not ascending");
        if ((xm[j] & zm[j + 1]) != zm[j])
            throw StructuralError("pair chain is not cartesian");
    }
    Flag f = blank_flag(m);
    auto xobj = [&](int k, int l) { return c.require_object(xm[l] & ~xm[k]); };
    for (int k = 0; k <= m; ++k)
        for (int l = k; l <= m; ++l)
            f.obj[k][l] = fp.obj_of_pair(
                xobj(k, l), c.require_object(zm[l] & ~zm[k]));
    for (int k = 0; k <= m; ++k)
        for (int l = k; l < m; ++l)
            f.h[k][l] = fp.mor_from_base(f.obj[k][l], f.obj[k][l + 1],
                                         c.inclusion(xobj(k, l),
                                                     xobj(k, l + 1)));
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l <= m; ++l)
            f.v[k][l] = fp.mor_from_base(f.obj[k + 1][l], f.obj[k][l],
                                         c.inclusion(xobj(k + 1, l),
                                                     xobj(k, l)));
    return f;
}

AddElement add_element_from_chains(F1PlusInstance& fp,
                                   const std::vector<ObjId>& pair_chain,
                                   const std::vector<ObjId>& s_tail,
                                   const std::vector<ObjId>& t_tail) {
    ConcreteSetInstance& c = fp.base();
    if (s_tail.empty() || s_tail.size() != t_tail.size())
        throw StructuralError("element chains: mismatched tails");
    AddElement e;
    e.m = (int)pair_chain.size() - 1;
    e.n = (int)s_tail.size() - 1;
    e.f1 = f1_flag_from_chain(fp, pair_chain);
    std::vector<ObjId> stops, ttops;
    for (ObjId p : pair_chain) {
        stops.push_back(fp.s_obj(p));
        ttops.push_back(fp.q_obj(p));
    }
    stops.insert(stops.end(), s_tail.begin(), s_tail.end());
    ttops.insert(ttops.end(), t_tail.begin(), t_tail.end());
    e.s = flag_from_top_row(c, stops);
    e.t = flag_from_top_row(c, ttops);
    return e;
}

AddElement add_face(F1PlusInstance& fp, const AddElement& e, int k) {
    if (k < 0 || k > e.m || e.m < 1)
        throw StructuralError("element face out of range");
    ConcreteSetInstance& c = fp.base();
    return {e.m - 1, e.n, face(fp, e.f1, k), face(c, e.s, k),
            face(c, e.t, k)};
}

AddElement add_degeneracy(F1PlusInstance& fp, const AddElement& e, int k) {
    if (k < 0 || k > e.m) throw StructuralError("element degeneracy out of range");
    ConcreteSetInstance& c = fp.base();
    return {e.m + 1, e.n, degeneracy(fp, e.f1, k), degeneracy(c, e.s, k),
            degeneracy(c, e.t, k)};
}

Flag rho_flag(ConcreteSetInstance& c, const Flag& f, int m) {
    if (m < 0 || m + 1 > f.n)
        throw StructuralError("rho: level out of range for the flag");
    const int n = f.n - m - 1;
    std::vector<ObjId> tops(n + 1);
    for (int j = 0; j <= n; ++j) {
        auto tri = c.subtraction(flag_row_mor(c, f, 0, m + 1, m + 1 + j));
        if (!tri)
            throw StructuralError("rho: no canonical subtraction at tail " +
                                  std::to_string(j));
        tops[j] = tri->complement;
    }
    return flag_from_top_row(c, tops);
}

std::pair<Flag, Flag> rho(F1PlusInstance& fp, const AddElement& e) {
    ConcreteSetInstance& c = fp.base();
    return {rho_flag(c, e.s, e.m), rho_flag(c, e.t, e.m)};
}

AddElement insert_flags(F1PlusInstance& fp, const Flag& sflag,
                        const Flag& tflag, int m) {
    ConcreteSetInstance& c = fp.base();
    if (m < 0 || sflag.n < 0 || sflag.n != tflag.n)
        throw StructuralError("insert: mismatched tail flags");
    AddElement e;
    e.m = m;
    e.n = sflag.n;
    e.f1 = blank_flag(m);
    ObjId ip = fp.initial_object();
    MorId iid = fp.identity(ip);
    for (int k = 0; k <= m; ++k)
        for (int l = k; l <= m; ++l) {
            e.f1.obj[k][l] = ip;
            if (l < m) e.f1.h[k][l] = iid;
            if (k < l) e.f1.v[k][l] = iid;
        }
    std::vector<ObjId> stops(m + 1, c.initial_object()), ttops = stops;
    for (int j = 0; j <= sflag.n; ++j) {
        stops.push_back(sflag.obj[0][j]);
        ttops.push_back(tflag.obj[0][j]);
    }
    e.s = flag_from_top_row(c, stops);
    e.t = flag_from_top_row(c, ttops);
    return e;
}

AddElement gamma(F1PlusInstance& fp, const AddElement& e) {
    ConcreteSetInstance& c = fp.base();
    const int m = e.m, D = e.m + e.n + 1;
    ObjId init = c.initial_object();
    AddElement g;
    g.m = e.m;
    g.n = e.n;
    g.f1 = blank_flag(m);
    for (int k = 0; k <= m; ++k)
        for (int l = k; l <= m; ++l)
            g.f1.obj[k][l] =
                fp.obj_of_pair(fp.q_obj(e.f1.obj[k][l]), init);
    for (int k = 0; k <= m; ++k)
        for (int l = k; l < m; ++l)
            g.f1.h[k][l] = fp.mor_from_base(g.f1.obj[k][l],
                                            g.f1.obj[k][l + 1], e.t.h[k][l]);
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l <= m; ++l)
            g.f1.v[k][l] = fp.mor_from_base(g.f1.obj[k + 1][l],
                                            g.f1.obj[k][l], e.t.v[k][l]);
    g.s = blank_flag(D);
    for (int k = 0; k <= D; ++k)
        for (int l = k; l <= D; ++l)
            g.s.obj[k][l] =
                l <= m ? init : e.s.obj[std::max(k, m + 1)][l];
    for (int k = 0; k <= D; ++k)
        for (int l = k; l < D; ++l) {
            if (l < m)
                g.s.h[k][l] = c.identity(init);
            else if (l == m)
                g.s.h[k][l] = c.inclusion(init, g.s.obj[k][m + 1]);
            else
                g.s.h[k][l] = e.s.h[std::max(k, m + 1)][l];
        }
    for (int k = 0; k < D; ++k)
        for (int l = k + 1; l <= D; ++l) {
            if (l <= m)
                g.s.v[k][l] = c.identity(init);
            else if (k + 1 <= m + 1)
                g.s.v[k][l] = c.identity(g.s.obj[k][l]);
            else
                g.s.v[k][l] = e.s.v[k][l];
        }
    g.t = e.t;
    return g;
}

AddElement e_n(F1PlusInstance& fp, const AddElement& e) {
    auto [sf, tf] = rho(fp, e);
    return insert_flags(fp, sf, tf, e.m);
}

AddElement homotopy_h(F1PlusInstance& fp, int i, const AddElement& e) {
    ConcreteSetInstance& c = fp.base();
    const int m = e.m, n = e.n;
    if (i < 0 || i > m) throw StructuralError("homotopy index out of range");
    const int M = m + 1;          // output level
    const int D = m + n + 2;      // output tail-flag degree
    ObjId init = c.initial_object();

    std::vector<ObjId> sa(i + 1);
    for (int k = 0; k <= i; ++k) sa[k] = sa_object(c, e.s, m, k);

    // canonical pushouts C_{k,l-1} u_{A_{k,l-1}} (S_0 - A_k)
    std::vector<std::vector<ApexData>> ap(i + 1,
                                          std::vector<ApexData>(M + 1));
    for (int k = 0; k <= i; ++k)
        for (int l = i + 1; l <= M; ++l) {
            ObjId a = fp.s_obj(e.f1.obj[k][l - 1]);
            ObjId x = fp.t_obj(e.f1.obj[k][l - 1]);
            ApexData& d = ap[k][l];
            d.left = c.inclusion(a, x);
            d.right = c.inclusion(a, sa[k]);
            auto po = c.pushout(d.left, d.right);
            if (!po)
                throw StructuralError(
                    "homotopy: missing canonical pushout of the span " +
                    c.object_label(x) + " <- " + c.object_label(a) + " -> " +
                    c.object_label(sa[k]));
            d.po = *po;
            d.zp = c.require_object(c.image_mask(d.po.from_right));
        }

    // --- the pair flag ---------------------------------------------------
    Flag nf = blank_flag(M);
    for (int k = 0; k <= M; ++k)
        for (int l = k; l <= M; ++l) {
            if (l <= i)
                nf.obj[k][l] = e.f1.obj[k][l];
            else if (k <= i)
                nf.obj[k][l] = fp.obj_of_pair(ap[k][l].po.apex, ap[k][l].zp);
            else
                nf.obj[k][l] = fp.obj_of_pair(
                    fp.q_obj(e.f1.obj[k - 1][l - 1]), init);
        }
    auto mediator = [&](const ApexData& from, MorId f, MorId g, int k,
                        int l) {
        auto med = c.pushout_mediator(from.left, from.right, from.po, f, g);
        if (!med)
            throw StructuralError(
                "homotopy: pushout mediator missing at slot " + slot(k, l));
        return *med;
    };
    for (int k = 0; k <= M; ++k)
        for (int l = k; l < M; ++l) {
            if (l + 1 <= i) {
                nf.h[k][l] = e.f1.h[k][l];
            } else if (k <= i && l == i) {
                nf.h[k][l] = fp.mor_from_base(nf.obj[k][l], nf.obj[k][l + 1],
                                              ap[k][l + 1].po.from_left);
            } else if (k <= i) {
                MorId f = c.compose(fp.t_mor(e.f1.h[k][l - 1]),
                                    ap[k][l + 1].po.from_left);
                MorId base = mediator(ap[k][l], f,
                                      ap[k][l + 1].po.from_right, k, l);
                nf.h[k][l] =
                    fp.mor_from_base(nf.obj[k][l], nf.obj[k][l + 1], base);
            } else {
                nf.h[k][l] = fp.mor_from_base(nf.obj[k][l], nf.obj[k][l + 1],
                                              e.t.h[k - 1][l - 1]);
            }
        }
    for (int k = 0; k < M; ++k)
        for (int l = k + 1; l <= M; ++l) {
            if (l <= i) {
                nf.v[k][l] = e.f1.v[k][l];
            } else if (k + 1 <= i) {
                MorId f = c.compose(fp.t_mor(e.f1.v[k][l - 1]),
                                    ap[k][l].po.from_left);
                MorId g = c.compose(c.inclusion(sa[k + 1], sa[k]),
                                    ap[k][l].po.from_right);
                MorId base = mediator(ap[k + 1][l], f, g, k, l);
                nf.v[k][l] =
                    fp.mor_from_base(nf.obj[k + 1][l], nf.obj[k][l], base);
            } else if (k == i) {
                // the designated composite: embed B, then glue
                ObjId b = fp.q_obj(e.f1.obj[i][l - 1]);
                MorId base = c.compose(
                    c.inclusion(b, fp.t_obj(e.f1.obj[i][l - 1])),
                    ap[i][l].po.from_left);
                nf.v[k][l] =
                    fp.mor_from_base(nf.obj[k + 1][l], nf.obj[k][l], base);
            } else {
                nf.v[k][l] = fp.mor_from_base(nf.obj[k + 1][l], nf.obj[k][l],
                                              e.t.v[k - 1][l - 1]);
            }
        }

    // --- the Z-level flag --------------------------------------------------
    Flag ns = blank_flag(D);
    for (int k = 0; k <= D; ++k)
        for (int l = k; l <= D; ++l) {
            if (l <= M)
                ns.obj[k][l] = fp.s_obj(nf.obj[k][l]);
            else if (k <= i)
                ns.obj[k][l] = e.s.obj[k][l - 1];
            else
                ns.obj[k][l] = e.s.obj[std::max(k - 1, m + 1)][l - 1];
        }
    for (int k = 0; k <= D; ++k)
        for (int l = k; l < D; ++l) {
            if (l + 1 <= M) {
                ns.h[k][l] = fp.s_mor(nf.h[k][l]);
            } else if (l == M) {
                // out of the fresh copies, back to the literal tails
                ns.h[k][l] = k <= i ? unembed(c, ap[k][M].po, sa[k],
                                              ns.obj[k][M])
                                    : c.identity(init);
            } else if (k <= i) {
                ns.h[k][l] = e.s.h[k][l - 1];
            } else {
                ns.h[k][l] = e.s.h[std::max(k - 1, m + 1)][l - 1];
            }
        }
    for (int k = 0; k < D; ++k)
        for (int l = k + 1; l <= D; ++l) {
            if (l <= M)
                ns.v[k][l] = fp.s_mor(nf.v[k][l]);
            else if (k + 1 <= i)
                ns.v[k][l] = e.s.v[k][l - 1];
            else if (k == i)
                ns.v[k][l] = flag_leg_mor(c, e.s, i, m + 1, l - 1);
            else if (k < m + 2)
                ns.v[k][l] = c.identity(e.s.obj[m + 1][l - 1]);
            else
                ns.v[k][l] = e.s.v[k - 1][l - 1];
        }

    // --- the complement flag ------------------------------------------------
    Flag nt = blank_flag(D);
    for (int k = 0; k <= D; ++k)
        for (int l = k; l <= D; ++l) {
            if (l <= M)
                nt.obj[k][l] = fp.q_obj(nf.obj[k][l]);
            else
                nt.obj[k][l] = e.t.obj[k <= i ? k : k - 1][l - 1];
        }
    for (int k = 0; k <= D; ++k)
        for (int l = k; l < D; ++l) {
            if (l + 1 <= M)
                nt.h[k][l] = fp.q_mor(nf.h[k][l]);
            else
                nt.h[k][l] = e.t.h[k <= i ? k : k - 1][l - 1];
        }
    for (int k = 0; k < D; ++k)
        for (int l = k + 1; l <= D; ++l) {
            if (l <= M)
                nt.v[k][l] = fp.q_mor(nf.v[k][l]);
            else if (k < i)
                nt.v[k][l] = e.t.v[k][l - 1];
            else if (k == i)
                nt.v[k][l] = c.identity(e.t.obj[i][l - 1]);
            else
                nt.v[k][l] = e.t.v[k - 1][l - 1];
        }

    return {M, n, nf, ns, nt};
}

namespace {

// 0 = strict equality of choices, 1 = canonical-label agreement only,
// -1 = different diagrams.
int element_eq_mode(F1PlusInstance& fp, const AddElement& a,
                    const AddElement& b) {
    if (a == b) return 0;
    if (a.m != b.m || a.n != b.n) return -1;
    ConcreteSetInstance& c = fp.base();
    for (int k = 0; k <= a.m; ++k)
        for (int l = k; l <= a.m; ++l)
            if (fp.canonical_label(a.f1.obj[k][l]) !=
                fp.canonical_label(b.f1.obj[k][l]))
                return -1;
    for (int k = 0; k <= a.s.n; ++k)
        for (int l = k; l <= a.s.n; ++l)
            if (c.canonical_label(a.s.obj[k][l]) !=
                    c.canonical_label(b.s.obj[k][l]) ||
                c.canonical_label(a.t.obj[k][l]) !=
                    c.canonical_label(b.t.obj[k][l]))
                return -1;
    return 1;
}

}  // namespace

HomotopyReport verify_homotopy(F1PlusInstance& fp,
                               const std::vector<AddElement>& corpus) {
    HomotopyReport r;
    for (const AddElement& e : corpus) {
        const long long id = r.elements_checked++;
        const int m = e.m;
        std::vector<AddElement> hs;
        hs.reserve(m + 1);
        for (int j = 0; j <= m; ++j) hs.push_back(homotopy_h(fp, j, e));
        for (int j = 0; j <= m; ++j) {
            CheckReport v = validate_add_element(fp, hs[j]);
            ++r.report.configurations;
            if (!v.ok())
                r.report.add("homotopy output",
                             "element " + std::to_string(id) + ", h_" +
                                 std::to_string(j) + ": " + v.summary());
        }
        auto check = [&](const AddElement& lhs, const AddElement& rhs,
                         const std::string& name) {
            ++r.identities_checked;
            ++r.report.configurations;
            int mode = element_eq_mode(fp, lhs, rhs);
            if (mode == 0)
                ++r.strict;
            else if (mode == 1)
                ++r.up_to_iso;
            else
                r.report.add(name,
                             "element " + std::to_string(id) +
                                 ": the two diagrams differ");
        };
        check(add_face(fp, hs[0], 0), gamma(fp, e), "d0 h0 = gamma");
        check(add_face(fp, hs[m], m + 1), e, "d(m+1) hm = id");
        for (int j = 1; j <= m; ++j)
            for (int k = 0; k < j; ++k)
                check(add_face(fp, hs[j], k),
                      homotopy_h(fp, j - 1, add_face(fp, e, k)),
                      "dk hj = h(j-1) dk");
        for (int j = 0; j < m; ++j)
            check(add_face(fp, hs[j + 1], j + 1), add_face(fp, hs[j], j + 1),
                  "d(j+1) h(j+1) = d(j+1) hj");
        for (int j = 0; j <= m; ++j)
            for (int k = j + 2; k <= m + 1; ++k)
                check(add_face(fp, hs[j], k),
                      homotopy_h(fp, j, add_face(fp, e, k - 1)),
                      "dk hj = hj d(k-1)");
        for (int j = 0; j <= m; ++j)
            for (int k = 0; k <= j; ++k)
                check(add_degeneracy(fp, hs[j], k),
                      homotopy_h(fp, j + 1, add_degeneracy(fp, e, k)),
                      "sk hj = h(j+1) sk");
        for (int j = 0; j <= m; ++j)
            for (int k = j + 1; k <= m + 1; ++k)
                check(add_degeneracy(fp, hs[j], k),
                      homotopy_h(fp, j, add_degeneracy(fp, e, k - 1)),
                      "sk hj = hj s(k-1)");
    }
    r.report.normalize();
    return r;
}

namespace {

// Ascending chains of window pairs / window objects used by the corpora.
std::vector<ObjId> window_pairs(F1PlusInstance& fp, Mask world) {
    ConcreteSetInstance& c = fp.base();
    std::vector<ObjId> out;
    for (ObjId p = 0; p < fp.object_count(); ++p)
        if ((c.mask_of(fp.pair_of(p).first) & ~world) == 0) out.push_back(p);
    return out;
}

bool pair_step_ok(F1PlusInstance& fp, ObjId from, ObjId to) {
    ConcreteSetInstance& c = fp.base();
    auto [x0, z0] = fp.pair_of(from);
    auto [x1, z1] = fp.pair_of(to);
    if (c.mask_of(x0) & ~c.mask_of(x1)) return false;
    return (c.mask_of(x0) & c.mask_of(z1)) == c.mask_of(z0);
}

std::vector<ObjId> window_objects(ConcreteSetInstance& c, Mask world) {
    std::vector<ObjId> out;
    for (ObjId x = 0; x < c.object_count(); ++x)
        if ((c.mask_of(x) & ~world) == 0) out.push_back(x);
    return out;
}

void require_headroom(ConcreteSetInstance& c, int universe) {
    if (universe < 1 || universe > 32)
        throw StructuralError("additivity corpus: bad universe size");
    if (c.universe_size() < 2 * universe)
        throw StructuralError(
            "additivity corpus: the instance needs at least twice the "
            "corpus universe in atoms so canonical pushouts exist");
}

}  // namespace

std::vector<AddElement> enumerate_add_elements(F1PlusInstance& fp, int m,
                                               int n, int universe) {
    ConcreteSetInstance& c = fp.base();
    require_headroom(c, universe);
    if (m < 0 || n < 0) throw StructuralError("additivity corpus: bad bidegree");
    const Mask world = (Mask(1) << universe) - 1;
    std::vector<ObjId> pairs = window_pairs(fp, world);
    std::vector<ObjId> objs = window_objects(c, world);

    std::vector<std::vector<ObjId>> chains;
    std::vector<ObjId> cur{fp.initial_object()};
    auto rec_pairs = [&](auto&& self) -> void {
        if ((int)cur.size() == m + 1) {
            chains.push_back(cur);
            return;
        }
        for (ObjId q : pairs)
            if (pair_step_ok(fp, cur.back(), q)) {
                cur.push_back(q);
                self(self);
                cur.pop_back();
            }
    };
    rec_pairs(rec_pairs);

    // ascending object chains of length n+1 whose first entry contains
    // `floor`
    auto tails = [&](Mask floor) {
        std::vector<std::vector<ObjId>> out;
        std::vector<ObjId> t;
        auto rec = [&](auto&& self) -> void {
            if ((int)t.size() == n + 1) {
                out.push_back(t);
                return;
            }
            Mask prev = t.empty() ? floor : c.mask_of(t.back());
            for (ObjId x : objs)
                if ((prev & ~c.mask_of(x)) == 0) {
                    t.push_back(x);
                    self(self);
                    t.pop_back();
                }
        };
        rec(rec);
        return out;
    };

    std::vector<AddElement> out;
    for (const auto& ch : chains) {
        auto [xm, zm] = fp.pair_of(ch.back());
        Mask zmask = c.mask_of(zm);
        Mask bmask = c.mask_of(xm) & ~zmask;
        for (const auto& st : tails(zmask))
            for (const auto& tt : tails(bmask))
                out.push_back(add_element_from_chains(fp, ch, st, tt));
    }
    return out;
}

std::vector<AddElement> random_add_elements(F1PlusInstance& fp, int universe,
                                            int count, unsigned seed,
                                            int max_m, int max_n) {
    ConcreteSetInstance& c = fp.base();
    require_headroom(c, universe);
    const Mask world = (Mask(1) << universe) - 1;
    std::vector<ObjId> pairs = window_pairs(fp, world);
    std::vector<ObjId> objs = window_objects(c, world);
    std::mt19937 rng(seed);
    auto pick = [&](size_t n) { return (size_t)(rng() % n); };

    std::vector<AddElement> out;
    out.reserve(count);
    while ((int)out.size() < count) {
        int m = (int)pick(max_m + 1), n = (int)pick(max_n + 1);
        std::vector<ObjId> ch{fp.initial_object()};
        for (int j = 0; j < m; ++j) {
            std::vector<ObjId> next;
            for (ObjId q : pairs)
                if (pair_step_ok(fp, ch.back(), q)) next.push_back(q);
            ch.push_back(next[pick(next.size())]);
        }
        auto grow = [&](Mask floor) {
            std::vector<ObjId> t;
            for (int j = 0; j <= n; ++j) {
                Mask prev = t.empty() ? floor : c.mask_of(t.back());
                std::vector<ObjId> next;
                for (ObjId x : objs)
                    if ((prev & ~c.mask_of(x)) == 0) next.push_back(x);
                t.push_back(next[pick(next.size())]);
            }
            return t;
        };
        auto [xm, zm] = fp.pair_of(ch.back());
        Mask zmask = c.mask_of(zm);
        out.push_back(add_element_from_chains(
            fp, ch, grow(zmask), grow(c.mask_of(xm) & ~zmask)));
    }
    return out;
}

AddElement appendix_element(F1PlusInstance& fp) {
    ConcreteSetInstance& c = fp.base();
    if (c.universe_size() < 6)
        throw StructuralError("appendix element needs a 6-atom base");
    std::vector<ObjId> chain{fp.initial_object()};
    for (int j = 1; j <= 5; ++j) {
        Mask a = (Mask(1) << j) - 1;
        chain.push_back(fp.obj_of_pair(c.require_object(a | (Mask(1) << 5)),
                                       c.require_object(a)));
    }
    ObjId s0 = c.require_object((Mask(1) << 5) - 1);
    ObjId t0 = c.require_object(Mask(1) << 5);
    return add_element_from_chains(fp, chain, {s0}, {t0});
}

std::string appendix_h3_json(F1PlusInstance& fp) {
    ConcreteSetInstance& c = fp.base();
    AddElement h = homotopy_h(fp, 3, appendix_element(fp));
    nlohmann::json out;
    out["schema_version"] = 1;
    out["m"] = 5;
    out["n"] = 0;
    out["i"] = 3;
    auto grid = [&](auto proj) {
        nlohmann::json g = nlohmann::json::array();
        for (int k = 0; k <= h.m; ++k) {
            nlohmann::json row = nlohmann::json::array();
            for (int l = 0; l <= h.m; ++l)
                row.push_back(l < k ? nlohmann::json()
                                    : nlohmann::json(c.object_label(
                                          proj(h.f1.obj[k][l]))));
            g.push_back(row);
        }
        return g;
    };
    out["a_grid"] = grid([&](ObjId x) { return fp.s_obj(x); });
    out["b_grid"] = grid([&](ObjId x) { return fp.q_obj(x); });
    out["c_grid"] = grid([&](ObjId x) { return fp.t_obj(x); });
    nlohmann::json stop = nlohmann::json::array(),
                   ttop = nlohmann::json::array();
    for (int l = 0; l <= h.s.n; ++l) {
        stop.push_back(c.object_label(h.s.obj[0][l]));
        ttop.push_back(c.object_label(h.t.obj[0][l]));
    }
    out["s_top"] = stop;
    out["t_top"] = ttop;
    return out.dump(2) + "\n";
}

}  // namespace swk

#include "swk/k0.hpp"

#include <set>
#include <sstream>

namespace swk {

namespace {

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

// invariant factors > 1 and free rank of Z^g / rows
void group_invariants(const Matrix& rows, size_t g, int& free_rank,
                      std::vector<Int>& torsion) {
    torsion.clear();
    if (rows.empty()) {
        free_rank = (int)g;
        return;
    }
    SnfResult s = smith_normal_form(rows);
    int nonzero = 0;
    for (const Int& d : s.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) torsion.push_back(d);
    }
    free_rank = (int)g - nonzero;
}

}  // namespace

int IsoClasses::class_of(SwCategory& c, ObjId x) const {
    auto it = index.find(c.canonical_label(x));
    if (it == index.end())
        throw StructuralError("iso class lookup: object outside the window: " +
                              c.object_label(x));
    return it->second;
}

IsoClasses iso_classes(SwCategory& c, size_t bound) {
    IsoClasses out;
    auto push = [&](ObjId x) {
        std::string key = c.canonical_label(x);
        if (out.index.count(key)) return;
        out.index[key] = (int)out.labels.size();
        out.labels.push_back(key);
        out.reps.push_back(x);
    };
    push(c.initial_object());  // class 0
    for (ObjId x : c.objects_within((int)bound)) push(x);
    return out;
}

Presentation k0_presentation(SwCategory& c, size_t bound) {
    Presentation p;
    p.classes = iso_classes(c, bound);
    size_t g = p.classes.labels.size();

    std::set<std::vector<Int>> seen;
    auto add_row = [&](std::vector<Int> row, const std::string& desc) {
        bool zero = true;
        for (const Int& e : row)
            if (e != 0) zero = false;
        if (zero || !seen.insert(row).second) return;
        p.relations.push_back(std::move(row));
        p.relation_desc.push_back(desc);
    };

    // [initial] = 0
    {
        std::vector<Int> row(g, 0);
        row[0] = 1;
        add_row(std::move(row), "[" + p.classes.labels[0] + "] = 0");
    }
    // one row [X] - [Z] - [X \ Z] per class of subtraction sequences
    for (ObjId x : c.objects_within((int)bound)) {
        int cx = p.classes.class_of(c, x);
        for (MorId cof : c.cof_subobject_reps(x)) {
            auto tri = c.subtraction(cof);
            if (!tri) continue;
            int cz = p.classes.class_of(c, c.mor_src(cof));
            int cy = p.classes.class_of(c, tri->complement);
            std::vector<Int> row(g, 0);
            row[cx] += 1;
            row[cz] -= 1;
            row[cy] -= 1;
            add_row(std::move(row),
                    "[" + p.classes.labels[cx] + "] = [" +
                        p.classes.labels[cz] + "] + [" + p.classes.labels[cy] +
                        "]");
        }
    }
    return p;
}

std::vector<Int> K0Group::reduce(const std::vector<Int>& gen_vector) const {
    size_t g = pres.classes.labels.size();
    if (gen_vector.size() != g)
        throw StructuralError("K0 reduce: wrong vector length");
    // change of basis y = x * V turns the relation lattice into the
    // diagonal lattice of D
    std::vector<Int> y(g, 0);
    if (pres.relations.empty()) {
        y = gen_vector;
    } else {
        for (size_t j = 0; j < g; ++j)
            for (size_t i = 0; i < g; ++i)
                y[j] += gen_vector[i] * snf.v[i][j];
    }
    std::vector<Int> diag =
        pres.relations.empty() ? std::vector<Int>{} : snf.diagonal();
    std::vector<Int> out;
    for (size_t i = 0; i < g; ++i) {
        Int d = i < diag.size() ? diag[i] : Int(0);
        if (d == 1) continue;  // killed coordinate
        if (d == 0) {
            out.push_back(y[i]);
        } else {
            Int r = y[i] % d;
            if (r < 0) r += d;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<Int> K0Group::class_of_object(SwCategory& c, ObjId x) const {
    std::vector<Int> e(pres.classes.labels.size(), 0);
    e[pres.classes.class_of(c, x)] = 1;
    return reduce(e);
}

bool K0Group::is_zero(const std::vector<Int>& gen_vector) const {
    for (const Int& e : reduce(gen_vector))
        if (e != 0) return false;
    return true;
}

K0Group k0_group(SwCategory& c, size_t bound) {
    K0Group g;
    g.pres = k0_presentation(c, bound);
    size_t gens = g.pres.classes.labels.size();
    if (!g.pres.relations.empty()) g.snf = smith_normal_form(g.pres.relations);
    group_invariants(g.pres.relations, gens, g.free_rank, g.torsion);
    return g;
}

std::optional<std::vector<Int>> k0_ring_product(ConcreteSetInstance& c,
                                                const K0Group& g, ObjId x,
                                                ObjId y, size_t bound) {
    auto p = c.product_object(x, y);
    if (!p) return std::nullopt;
    if ((size_t)c.object_size(*p) > bound) return std::nullopt;
    return g.class_of_object(c, *p);
}

AdditivityK0Report additivity_on_k0(F1PlusInstance& f1, size_t bound) {
    AdditivityK0Report rep;
    ConcreteSetInstance& base = f1.base();
    K0Group top = k0_group(f1, bound);
    K0Group bot = k0_group(base, bound);
    size_t gt = top.pres.classes.labels.size();
    size_t gb = bot.pres.classes.labels.size();

    // the map on generators: (Z <= X) |-> ([Z], [X \ Z]) in Z^gb x Z^gb
    std::vector<std::vector<Int>> phi(gt, std::vector<Int>(2 * gb, 0));
    for (size_t j = 0; j < gt; ++j) {
        ObjId pr = top.pres.classes.reps[j];
        phi[j][bot.pres.classes.class_of(base, f1.s_obj(pr))] += 1;
        phi[j][gb + bot.pres.classes.class_of(base, f1.q_obj(pr))] += 1;
    }

    // well defined: every relation of K_0(F_1^+) maps into the relation
    // lattice of K_0(C) x K_0(C)
    rep.well_defined = true;
    for (size_t r = 0; r < top.pres.relations.size(); ++r) {
        std::vector<Int> img(2 * gb, 0);
        for (size_t j = 0; j < gt; ++j) {
            const Int& coef = top.pres.relations[r][j];
            if (coef == 0) continue;
            for (size_t k = 0; k < 2 * gb; ++k) img[k] += coef * phi[j][k];
        }
        std::vector<Int> left(img.begin(), img.begin() + gb);
        std::vector<Int> right(img.begin() + gb, img.end());
        if (!bot.is_zero(left) || !bot.is_zero(right)) {
            rep.well_defined = false;
            rep.detail += "relation not preserved: " +
                          top.pres.relation_desc[r] + " -> " + vec_str(left) +
                          " x " + vec_str(right) + "; ";
        }
    }

    // target relations R x 0 and 0 x R
    Matrix target_rel;
    for (const auto& row : bot.pres.relations) {
        std::vector<Int> a(2 * gb, 0), b(2 * gb, 0);
        for (size_t k = 0; k < gb; ++k) {
            a[k] = row[k];
            b[gb + k] = row[k];
        }
        target_rel.push_back(std::move(a));
        target_rel.push_back(std::move(b));
    }

    // surjective: images of generators plus target relations span Z^{2gb}
    Matrix span = phi;
    for (const auto& row : target_rel) span.push_back(row);
    {
        SnfResult s = smith_normal_form(span);
        int ones = 0;
        for (const Int& d : s.diagonal())
            if (d == 1) ++ones;
        rep.surjective = (size_t)ones == 2 * gb;
        if (!rep.surjective) rep.detail += "image does not span the target; ";
    }

    // isomorphism: a surjection between groups with equal invariants
    int tfree, pfree;
    std::vector<Int> ttors, ptors;
    tfree = top.free_rank;
    ttors = top.torsion;
    group_invariants(target_rel, 2 * gb, pfree, ptors);
    bool same = tfree == pfree && ttors == ptors;
    if (!same)
        rep.detail += "group invariants differ: source rank " +
                      std::to_string(tfree) + ", target rank " +
                      std::to_string(pfree) + "; ";
    rep.isomorphism = rep.well_defined && rep.surjective && same;
    return rep;
}

}  // namespace swk

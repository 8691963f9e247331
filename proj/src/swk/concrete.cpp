#include "swk/concrete.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace swk {

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::string default_atom_name(int i) {
    if (i < 26) return std::string(1, char('a' + i));
    return "a" + std::to_string(i);
}

}  // namespace

// --- GroupTable ---------------------------------------------------------

GroupTable GroupTable::trivial() { return GroupTable{1, {{0}}}; }

GroupTable GroupTable::cyclic(int n) {
    GroupTable g;
    g.order = n;
    g.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    return g;
}

void GroupTable::validate() const {
    if (order <= 0 || (int)mult.size() != order)
        throw StructuralError("group table: bad order");
    for (const auto& row : mult) {
        if ((int)row.size() != order)
            throw StructuralError("group table: ragged row");
        for (int v : row)
            if (v < 0 || v >= order)
                throw StructuralError("group table: entry out of range");
    }
    for (int a = 0; a < order; ++a)
        if (mult[0][a] != a || mult[a][0] != a)
            throw StructuralError("group table: element 0 is not an identity");
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw StructuralError("group table: not associative");
    for (int a = 0; a < order; ++a) {
        bool has_inv = false;
        for (int b = 0; b < order; ++b) has_inv |= (mult[a][b] == 0);
        if (!has_inv) throw StructuralError("group table: missing inverse");
    }
}

int GroupTable::inverse(int g) const {
    for (int b = 0; b < order; ++b)
        if (mult[g][b] == 0) return b;
    throw StructuralError("group table: missing inverse");
}

const GroupTable& intern_group(const GroupTable& g) {
    static std::deque<GroupTable> pool;
    for (const auto& h : pool)
        if (h.order == g.order && h.mult == g.mult) return h;
    pool.push_back(g);
    return pool.back();
}

// --- construction -------------------------------------------------------

ConcreteSetInstance::ConcreteSetInstance(std::vector<std::string> atom_names,
                                         const GroupTable* group,
                                         std::vector<std::vector<int>> action,
                                         int size_cap, WeqPolicy weq)
    : atom_names_(std::move(atom_names)),
      group_(group),
      action_(std::move(action)),
      size_cap_(size_cap),
      weq_(weq) {
    const int n = universe_size();
    if (n > 64) throw StructuralError("universe exceeds 64 atoms");
    if (size_cap_ < 0) size_cap_ = n;
    if (group_) {
        group_->validate();
        if ((int)action_.size() != group_->order)
            throw StructuralError("action table: bad group dimension");
        for (const auto& row : action_)
            if ((int)row.size() != n)
                throw StructuralError("action table: bad atom dimension");
        for (int a = 0; a < n; ++a)
            if (action_[0][a] != a)
                throw StructuralError("action table: identity acts nontrivially");
        for (int g = 0; g < group_->order; ++g)
            for (int h = 0; h < group_->order; ++h)
                for (int a = 0; a < n; ++a)
                    if (action_[group_->mult[g][h]][a] !=
                        action_[g][action_[h][a]])
                        throw StructuralError("action table: not an action");
        compute_orbit_types();
    }

    // Enumerate admissible masks.  For G-sets only orbit unions qualify, so
    // enumerate over orbits instead of atoms.
    if (group_) {
        const int k = (int)orbit_atoms_.size();
        if (k > 24) throw StructuralError("too many orbits to tabulate");
        for (Mask sel = 0; sel < (Mask(1) << k); ++sel) {
            Mask m = 0;
            for (int o = 0; o < k; ++o)
                if (sel >> o & 1)
                    for (int a : orbit_atoms_[o]) m |= Mask(1) << a;
            if (popcount(m) <= size_cap_) objects_.push_back(m);
        }
    } else {
        if (n > 22) throw StructuralError("too many atoms to tabulate");
        for (Mask m = 0; m < (Mask(1) << n); ++m)
            if (popcount(m) <= size_cap_) objects_.push_back(m);
    }
    std::sort(objects_.begin(), objects_.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    atoms_.resize(objects_.size());
    for (ObjId x = 0; x < (ObjId)objects_.size(); ++x) {
        for (int a = 0; a < n; ++a)
            if (objects_[x] >> a & 1) atoms_[x].push_back(a);
        mask_to_obj_[objects_[x]] = x;
    }
}

void ConcreteSetInstance::compute_orbit_types() {
    const int n = universe_size();
    atom_orbit_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (atom_orbit_[a] >= 0) continue;
        int oid = (int)orbit_atoms_.size();
        std::vector<int> members;
        for (int g = 0; g < group_->order; ++g) {
            int b = action_[g][a];
            if (atom_orbit_[b] < 0) {
                atom_orbit_[b] = oid;
                members.push_back(b);
            }
        }
        std::sort(members.begin(), members.end());
        orbit_atoms_.push_back(members);
    }
    // Stabilizer of an atom as a bitmask over group elements.
    auto stab = [&](int a) {
        uint64_t s = 0;
        for (int g = 0; g < group_->order; ++g)
            if (action_[g][a] == a) s |= uint64_t(1) << g;
        return s;
    };
    orbit_type_.assign(orbit_atoms_.size(), -1);
    int next_type = 0;
    for (size_t o = 0; o < orbit_atoms_.size(); ++o) {
        if (orbit_type_[o] >= 0) continue;
        orbit_type_[o] = next_type;
        uint64_t s0 = stab(orbit_atoms_[o][0]);
        for (size_t o2 = o + 1; o2 < orbit_atoms_.size(); ++o2) {
            if (orbit_type_[o2] >= 0 ||
                orbit_atoms_[o2].size() != orbit_atoms_[o].size())
                continue;
            // Equivariantly isomorphic iff some point of o2 has exactly the
            // stabilizer of o's base point.
            for (int b : orbit_atoms_[o2])
                if (stab(b) == s0) {
                    orbit_type_[o2] = next_type;
                    break;
                }
        }
        ++next_type;
    }
}

// --- factories ----------------------------------------------------------

ConcreteSetInstance ConcreteSetInstance::finset(int universe_size,
                                                int size_cap) {
    std::vector<std::string> names;
    for (int i = 0; i < universe_size; ++i) names.push_back(default_atom_name(i));
    return ConcreteSetInstance(std::move(names), nullptr, {}, size_cap);
}

ConcreteSetInstance ConcreteSetInstance::gset(const GroupTable& g,
                                              int max_elements) {
    const GroupTable& gr = intern_group(g);
    gr.validate();
    const int ord = gr.order;
    // Subgroups: subsets containing the identity and closed under mult.
    std::vector<std::vector<int>> subgroups;
    for (uint64_t s = 1; s < (uint64_t(1) << ord); s += 2) {
        bool closed = true;
        for (int a = 0; a < ord && closed; ++a)
            for (int b = 0; b < ord && closed; ++b)
                if ((s >> a & 1) && (s >> b & 1) && !(s >> gr.mult[a][b] & 1))
                    closed = false;
        if (!closed) continue;
        std::vector<int> h;
        for (int a = 0; a < ord; ++a)
            if (s >> a & 1) h.push_back(a);
        subgroups.push_back(h);
    }

    std::vector<std::string> names;
    std::vector<std::vector<int>> coset_of_elt;  // per universe orbit
    // For each orbit copy, remember for every group element which atom its
    // coset representative maps to; atoms are appended in coset order.
    std::vector<std::vector<int>> action;
    std::vector<std::pair<int, std::vector<std::vector<int>>>> orbit_plan;
    int atom_count = 0;
    for (size_t hi = 0; hi < subgroups.size(); ++hi) {
        const auto& h = subgroups[hi];
        int index = ord / (int)h.size();
        if (index > max_elements || index == 0) continue;
        int copies = max_elements / index;
        // Left cosets of h.
        std::vector<int> coset_id(ord, -1);
        std::vector<std::vector<int>> cosets;
        for (int a = 0; a < ord; ++a) {
            if (coset_id[a] >= 0) continue;
            int cid = (int)cosets.size();
            std::vector<int> c;
            for (int x : h) {
                int e = gr.mult[a][x];
                if (coset_id[e] < 0) {
                    coset_id[e] = cid;
                    c.push_back(e);
                }
            }
            cosets.push_back(c);
        }
        for (int copy = 0; copy < copies; ++copy) {
            int base = atom_count;
            for (size_t c = 0; c < cosets.size(); ++c)
                names.push_back("o" + std::to_string(hi) + "c" +
                                std::to_string(copy) + "_" + std::to_string(c));
            atom_count += (int)cosets.size();
            orbit_plan.push_back({base, {}});
            auto& plan = orbit_plan.back().second;
            plan.assign(ord, std::vector<int>(cosets.size()));
            for (int g2 = 0; g2 < ord; ++g2)
                for (size_t c = 0; c < cosets.size(); ++c)
                    plan[g2][c] = coset_id[gr.mult[g2][cosets[c][0]]];
        }
        if (atom_count > 64)
            throw StructuralError("G-set universe exceeds 64 atoms");
    }
    action.assign(ord, std::vector<int>(atom_count));
    for (const auto& [base, plan] : orbit_plan) {
        int sz = (int)plan[0].size();
        for (int g2 = 0; g2 < ord; ++g2)
            for (int c = 0; c < sz; ++c) action[g2][base + c] = base + plan[g2][c];
    }
    return ConcreteSetInstance(std::move(names), &gr, std::move(action),
                               max_elements);
}

ConcreteSetInstance ConcreteSetInstance::varieties_window(int prime, int nvars,
                                                          int size_cap) {
    long long total = 1;
    for (int i = 0; i < nvars; ++i) total *= prime;
    if (total > 64)
        throw BudgetError("varieties window: p^n exceeds 64 atoms", total);
    std::vector<std::string> names;
    std::vector<int> tup(nvars, 0);
    for (long long r = 0; r < total; ++r) {
        long long v = r;
        for (int i = nvars - 1; i >= 0; --i) {
            tup[i] = (int)(v % prime);
            v /= prime;
        }
        std::string s = "(";
        for (int i = 0; i < nvars; ++i)
            s += (i ? "," : "") + std::to_string(tup[i]);
        s += ")";
        names.push_back(s);
    }
    if (names.empty()) names.push_back("()");  // F_p^0 has the single point ()
    return ConcreteSetInstance(std::move(names), nullptr, {}, size_cap);
}

// --- objects ------------------------------------------------------------

int ConcreteSetInstance::object_size(ObjId x) const {
    return (int)atoms_[x].size();
}

std::string ConcreteSetInstance::object_label(ObjId x) const {
    std::string s = "{";
    for (size_t i = 0; i < atoms_[x].size(); ++i)
        s += (i ? "," : "") + atom_names_[atoms_[x][i]];
    return s + "}";
}

std::string ConcreteSetInstance::canonical_label(ObjId x) const {
    if (!group_) return "n=" + std::to_string(object_size(x));
    std::map<int, int> counts;
    for (size_t o = 0; o < orbit_atoms_.size(); ++o)
        if (objects_[x] & (Mask(1) << orbit_atoms_[o][0]))
            counts[orbit_type_[o]]++;
    std::string s = "orb[";
    bool first = true;
    for (auto [t, c] : counts) {
        if (!first) s += ",";
        first = false;
        s += "t" + std::to_string(t) + ":" + std::to_string(c);
    }
    return s + "]";
}

ObjId ConcreteSetInstance::obj_of_mask(Mask m) const {
    auto it = mask_to_obj_.find(m);
    return it == mask_to_obj_.end() ? kNoObj : it->second;
}

ObjId ConcreteSetInstance::require_object(Mask m) const {
    ObjId x = obj_of_mask(m);
    if (x == kNoObj) throw StructuralError("mask is not an object");
    return x;
}

// --- morphisms ----------------------------------------------------------

int ConcreteSetInstance::atom_rank(ObjId x, int atom) const {
    const auto& v = atoms_[x];
    auto it = std::lower_bound(v.begin(), v.end(), atom);
    if (it == v.end() || *it != atom)
        throw StructuralError("atom not in object");
    return (int)(it - v.begin());
}

bool ConcreteSetInstance::map_equivariant(
    ObjId src, ObjId dst, const std::vector<uint8_t>& map) const {
    if (!group_) return true;
    for (int g = 1; g < group_->order; ++g)
        for (size_t i = 0; i < atoms_[src].size(); ++i) {
            int x = atoms_[src][i];
            int fx = atoms_[dst][map[i]];
            int gx = action_[g][x];
            int fgx = atoms_[dst][map[atom_rank(src, gx)]];
            if (fgx != action_[g][fx]) return false;
        }
    return true;
}

MorId ConcreteSetInstance::mor(ObjId src, ObjId dst,
                               const std::vector<uint8_t>& map) {
    if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
        throw StructuralError("mor: dangling object id");
    if (map.size() != atoms_[src].size())
        throw StructuralError("mor: map arity mismatch");
    for (uint8_t v : map)
        if (v >= atoms_[dst].size())
            throw StructuralError("mor: map value out of range");
    if (!map_equivariant(src, dst, map))
        throw StructuralError("mor: map is not equivariant");
    auto key = std::make_tuple(src, dst, map);
    auto it = mor_ids_.find(key);
    if (it != mor_ids_.end()) return it->second;
    MorId id = (MorId)mors_.size();
    mors_.push_back({src, dst, map});
    mor_ids_.emplace(std::move(key), id);
    return id;
}

ObjId ConcreteSetInstance::mor_src(MorId f) const { return mors_.at(f).src; }
ObjId ConcreteSetInstance::mor_dst(MorId f) const { return mors_.at(f).dst; }

const std::vector<uint8_t>& ConcreteSetInstance::map_of(MorId f) const {
    return mors_.at(f).map;
}

int ConcreteSetInstance::apply_atom(MorId f, int atom) const {
    const Mor& m = mors_.at(f);
    return atoms_[m.dst][m.map[atom_rank(m.src, atom)]];
}

Mask ConcreteSetInstance::image_mask(MorId f) const {
    const Mor& m = mors_.at(f);
    Mask im = 0;
    for (uint8_t v : m.map) im |= Mask(1) << atoms_[m.dst][v];
    return im;
}

bool ConcreteSetInstance::injective(MorId f) const {
    const Mor& m = mors_.at(f);
    return popcount(image_mask(f)) == (int)m.map.size();
}

MorId ConcreteSetInstance::identity(ObjId x) {
    std::vector<uint8_t> map(atoms_[x].size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = (uint8_t)i;
    return mor(x, x, map);
}

MorId ConcreteSetInstance::compose(MorId f, MorId g) {
    const Mor& mf = mors_.at(f);
    const Mor& mg = mors_.at(g);
    if (mf.dst != mg.src)
        throw StructuralError("compose: morphisms not composable");
    std::vector<uint8_t> map(mf.map.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = mg.map[mf.map[i]];
    return mor(mf.src, mg.dst, map);
}

std::vector<MorId> ConcreteSetInstance::hom(ObjId a, ObjId b) {
    auto key = std::make_pair(a, b);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
    const size_t sa = atoms_[a].size(), sb = atoms_[b].size();
    std::vector<MorId> out;
    if (sa == 0) {
        out.push_back(mor(a, b, {}));
    } else if (sb == 0) {
        // no maps
    } else {
        double count = 1;
        for (size_t i = 0; i < sa; ++i) count *= (double)sb;
        if (count > 5e6)
            throw BudgetError("hom enumeration budget exceeded",
                              (long long)count);
        std::vector<uint8_t> map(sa, 0);
        while (true) {
            if (map_equivariant(a, b, map)) out.push_back(mor(a, b, map));
            size_t i = 0;
            while (i < sa && map[i] + 1u == sb) map[i++] = 0;
            if (i == sa) break;
            ++map[i];
        }
    }
    // Keep the canonical enumeration order (lexicographic in the map), so
    // hom lists do not depend on interning history.
    hom_cache_[key] = out;
    return out;
}

bool ConcreteSetInstance::is_weq(MorId f) const {
    if (weq_ == WeqPolicy::EqualSize)
        return atoms_[mors_.at(f).src].size() == atoms_[mors_.at(f).dst].size();
    return is_iso(f);
}

bool ConcreteSetInstance::is_iso(MorId f) const {
    const Mor& m = mors_.at(f);
    return m.map.size() == atoms_[m.dst].size() && injective(f);
}

MorId ConcreteSetInstance::inclusion(ObjId sub, ObjId sup) {
    if ((mask_of(sub) & ~mask_of(sup)) != 0)
        throw StructuralError("inclusion: not a subset");
    std::vector<uint8_t> map(atoms_[sub].size());
    for (size_t i = 0; i < map.size(); ++i)
        map[i] = (uint8_t)atom_rank(sup, atoms_[sub][i]);
    return mor(sub, sup, map);
}

MorId ConcreteSetInstance::restrict(MorId f, Mask sub_src, Mask sub_dst) {
    const Mor& m = mors_.at(f);
    if ((sub_src & ~mask_of(m.src)) || (sub_dst & ~mask_of(m.dst)))
        throw StructuralError("restrict: masks not contained");
    ObjId s = require_object(sub_src), d = require_object(sub_dst);
    std::vector<uint8_t> map(atoms_[s].size());
    for (size_t i = 0; i < map.size(); ++i) {
        int img = apply_atom(f, atoms_[s][i]);
        if (!(sub_dst >> img & 1))
            throw StructuralError("restrict: image escapes submask");
        map[i] = (uint8_t)atom_rank(d, img);
    }
    return mor(s, d, map);
}

// --- SW structure -------------------------------------------------------

std::vector<MorId> ConcreteSetInstance::cof_subobject_reps(ObjId x) {
    std::vector<MorId> out;
    Mask mx = mask_of(x);
    for (ObjId y = 0; y < object_count(); ++y)
        if ((mask_of(y) & ~mx) == 0) out.push_back(inclusion(y, x));
    return out;
}

std::optional<SubtractionTriple> ConcreteSetInstance::subtraction(MorId cof) {
    if (!injective(cof)) return std::nullopt;
    ObjId x = mor_dst(cof);
    Mask comp = mask_of(x) & ~image_mask(cof);
    ObjId y = obj_of_mask(comp);
    if (y == kNoObj) return std::nullopt;
    return SubtractionTriple{cof, inclusion(y, x), y};
}

bool ConcreteSetInstance::is_subtraction_triple(MorId cof, MorId leg) {
    if (!injective(cof) || !injective(leg)) return false;
    if (mor_dst(cof) != mor_dst(leg)) return false;
    return image_mask(leg) == (mask_of(mor_dst(cof)) & ~image_mask(cof));
}

std::optional<PushoutResult> ConcreteSetInstance::pushout(MorId c1, MorId c2) {
    if (mor_src(c1) != mor_src(c2))
        throw StructuralError("pushout: cospan sources differ");
    if (!injective(c1) || !injective(c2)) return std::nullopt;
    ObjId z = mor_src(c1), x = mor_dst(c1), y = mor_dst(c2);
    Mask used = mask_of(x);
    // Atom-level map for the right leg Y -> P.
    std::vector<int> legy(universe_size(), -1);
    for (int a : atoms_[z]) legy[apply_atom(c2, a)] = apply_atom(c1, a);
    Mask rest = mask_of(y) & ~image_mask(c2);
    if (!group_) {
        for (int a = 0; a < universe_size(); ++a) {
            if (!(rest >> a & 1)) continue;
            int fresh = 0;
            while (fresh < universe_size() && (used >> fresh & 1)) ++fresh;
            if (fresh == universe_size()) return std::nullopt;
            legy[a] = fresh;
            used |= Mask(1) << fresh;
        }
    } else {
        auto stab = [&](int a) {
            uint64_t s = 0;
            for (int g = 0; g < group_->order; ++g)
                if (action_[g][a] == a) s |= uint64_t(1) << g;
            return s;
        };
        for (int a = 0; a < universe_size(); ++a) {
            if (!(rest >> a & 1) || legy[a] >= 0) continue;
            // Find an untouched universe orbit carrying a point with the
            // same stabilizer; map the orbit equivariantly onto it.
            uint64_t sa = stab(a);
            int chosen = -1;
            for (size_t o = 0; o < orbit_atoms_.size() && chosen < 0; ++o) {
                bool free_orbit = true;
                for (int b : orbit_atoms_[o]) free_orbit &= !(used >> b & 1);
                if (!free_orbit ||
                    orbit_atoms_[o].size() != orbit_atoms_[atom_orbit_[a]].size())
                    continue;
                for (int b : orbit_atoms_[o])
                    if (stab(b) == sa) {
                        chosen = b;
                        break;
                    }
            }
            if (chosen < 0) return std::nullopt;
            for (int g = 0; g < group_->order; ++g) {
                legy[action_[g][a]] = action_[g][chosen];
                used |= Mask(1) << action_[g][chosen];
            }
        }
    }
    if (popcount(used) > size_cap_) return std::nullopt;
    ObjId p = obj_of_mask(used);
    if (p == kNoObj) return std::nullopt;
    std::vector<uint8_t> map(atoms_[y].size());
    for (size_t i = 0; i < map.size(); ++i)
        map[i] = (uint8_t)atom_rank(p, legy[atoms_[y][i]]);
    return PushoutResult{p, inclusion(x, p), mor(y, p, map)};
}

std::optional<MorId> ConcreteSetInstance::pushout_mediator(
    MorId c1, MorId c2, const PushoutResult& p, MorId f, MorId g) {
    if (mor_src(f) != mor_dst(c1) || mor_src(g) != mor_dst(c2) ||
        mor_dst(f) != mor_dst(g))
        return std::nullopt;
    if (compose(c1, f) != compose(c2, g)) return std::nullopt;
    ObjId apex = p.apex, t = mor_dst(f);
    std::vector<int> med(universe_size(), -1);
    for (int a : atoms_[mor_src(f)]) med[apply_atom(p.from_left, a)] =
        apply_atom(f, a);
    for (int a : atoms_[mor_src(g)]) {
        int pa = apply_atom(p.from_right, a);
        int ta = apply_atom(g, a);
        if (med[pa] >= 0 && med[pa] != ta) return std::nullopt;
        med[pa] = ta;
    }
    std::vector<uint8_t> map(atoms_[apex].size());
    for (size_t i = 0; i < map.size(); ++i) {
        if (med[atoms_[apex][i]] < 0) return std::nullopt;
        map[i] = (uint8_t)atom_rank(t, med[atoms_[apex][i]]);
    }
    return mor(apex, t, map);
}

std::optional<PullbackResult> ConcreteSetInstance::pullback(MorId f, MorId g) {
    if (mor_dst(f) != mor_dst(g))
        throw StructuralError("pullback: span targets differ");
    auto build = [&](MorId inj, MorId other) -> PullbackResult {
        // Apex realized inside the source of `other`.
        ObjId a = mor_src(other);
        Mask im = image_mask(inj);
        Mask apex_mask = 0;
        for (int at : atoms_[a])
            if (im >> apply_atom(other, at) & 1) apex_mask |= Mask(1) << at;
        ObjId apex = require_object(apex_mask);
        // Map into the source of `inj` via its (partial) inverse.
        ObjId b = mor_src(inj);
        std::vector<int> inv(universe_size(), -1);
        for (int at : atoms_[b]) inv[apply_atom(inj, at)] = at;
        std::vector<uint8_t> map(atoms_[apex].size());
        for (size_t i = 0; i < map.size(); ++i)
            map[i] = (uint8_t)atom_rank(b, inv[apply_atom(other, atoms_[apex][i])]);
        return PullbackResult{apex, inclusion(apex, a), mor(apex, b, map)};
    };
    if (injective(g)) {
        PullbackResult r = build(g, f);
        return r;  // to_left into src(f), to_right into src(g)
    }
    if (injective(f)) {
        PullbackResult r = build(f, g);
        return PullbackResult{r.apex, r.to_right, r.to_left};
    }
    return std::nullopt;
}

bool ConcreteSetInstance::is_cartesian(MorId p, MorId q, MorId f, MorId g) {
    if (mor_src(p) != mor_src(q)) return false;
    if (mor_dst(p) != mor_src(f) || mor_dst(q) != mor_src(g)) return false;
    if (mor_dst(f) != mor_dst(g)) return false;
    if (compose(p, f) != compose(q, g)) return false;
    // Jointly injective and hitting every matching pair.
    ObjId apex = mor_src(p);
    std::vector<std::pair<int, int>> pairs;
    for (int a : atoms_[apex])
        pairs.push_back({apply_atom(p, a), apply_atom(q, a)});
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        return false;
    long matching = 0;
    for (int a : atoms_[mor_src(f)])
        for (int b : atoms_[mor_src(g)])
            if (apply_atom(f, a) == apply_atom(g, b)) ++matching;
    return matching == (long)pairs.size();
}

bool ConcreteSetInstance::is_cocartesian(MorId c1, MorId c2, MorId l1,
                                         MorId l2) {
    if (mor_src(c1) != mor_src(c2)) return false;
    if (mor_dst(l1) != mor_dst(l2)) return false;
    if (mor_dst(c1) != mor_src(l1) || mor_dst(c2) != mor_src(l2)) return false;
    if (compose(c1, l1) != compose(c2, l2)) return false;
    if (!injective(c1) || !injective(c2))
        throw StructuralError("is_cocartesian: cospan legs must be cofibrations");
    if (!injective(l1) || !injective(l2)) return false;
    Mask im1 = image_mask(l1), im2 = image_mask(l2);
    if ((im1 | im2) != mask_of(mor_dst(l1))) return false;
    return (im1 & im2) == image_mask(compose(c1, l1));
}

// --- product ------------------------------------------------------------

std::optional<ObjId> ConcreteSetInstance::product_object(ObjId a, ObjId b) {
    if (group_) return std::nullopt;
    int n = object_size(a) * object_size(b);
    if (n > universe_size() || n > size_cap_) return std::nullopt;
    Mask m = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    return obj_of_mask(m) == kNoObj ? std::nullopt
                                    : std::optional<ObjId>(obj_of_mask(m));
}

std::optional<MorId> ConcreteSetInstance::product_mor(MorId f, MorId g) {
    auto p = product_object(mor_src(f), mor_src(g));
    auto q = product_object(mor_dst(f), mor_dst(g));
    if (!p || !q) return std::nullopt;
    int sb = object_size(mor_src(g));
    int db = object_size(mor_dst(g));
    const auto& mf = map_of(f);
    const auto& mg = map_of(g);
    std::vector<uint8_t> map((size_t)object_size(*p));
    for (int i = 0; i < object_size(mor_src(f)); ++i)
        for (int j = 0; j < sb; ++j)
            map[(size_t)(i * sb + j)] = (uint8_t)(mf[i] * db + mg[j]);
    return mor(*p, *q, map);
}

}  // namespace swk

#include "swk/f1plus.hpp"

namespace swk {

F1PlusInstance::F1PlusInstance(ConcreteSetInstance& base) : base_(base) {
    for (ObjId x = 0; x < base_.object_count(); ++x) {
        const Mask mx = base_.mask_of(x);
        // submasks in increasing numeric order
        for (Mask s = 0;; s = (s - mx) & mx) {
            ObjId z = base_.obj_of_mask(s);
            if (z != kNoObj) {
                pair_to_obj_[{x, z}] = (ObjId)pairs_.size();
                pairs_.push_back({x, z});
            }
            if (s == mx) break;
        }
    }
    initial_ = obj_of_pair(base_.initial_object(), base_.initial_object());
    if (initial_ == kNoObj)
        throw StructuralError("subtraction-sequence category: no initial pair");
}

ObjId F1PlusInstance::obj_of_pair(ObjId base_x, ObjId base_z) const {
    auto it = pair_to_obj_.find({base_x, base_z});
    return it == pair_to_obj_.end() ? kNoObj : it->second;
}

int F1PlusInstance::object_size(ObjId x) const {
    return base_.object_size(pairs_.at(x).first);
}

std::string F1PlusInstance::object_label(ObjId x) const {
    return "[" + base_.object_label(pairs_.at(x).second) + "<=" +
           base_.object_label(pairs_.at(x).first) + "]";
}

ObjId F1PlusInstance::q_obj(ObjId x) const {
    return base_.require_object(x_mask(x) & ~z_mask(x));
}

std::string F1PlusInstance::canonical_label(ObjId x) const {
    return base_.canonical_label(pairs_.at(x).second) + "|" +
           base_.canonical_label(q_obj(x));
}

bool F1PlusInstance::preimage_ok(MorId base_f, ObjId src, ObjId dst) const {
    const Mask zs = z_mask(src), zd = z_mask(dst);
    for (int a : base_.atoms_of(pairs_[src].first)) {
        const bool in_z = (zs >> a) & 1;
        const bool img_in_z = (zd >> base_.apply_atom(base_f, a)) & 1;
        if (in_z != img_in_z) return false;
    }
    return true;
}

MorId F1PlusInstance::intern(ObjId src, ObjId dst, MorId base_f) {
    auto key = std::make_tuple(src, dst, base_f);
    auto it = mor_ids_.find(key);
    if (it != mor_ids_.end()) return it->second;
    MorId id = (MorId)mors_.size();
    mors_.push_back({src, dst, base_f});
    mor_ids_[key] = id;
    return id;
}

MorId F1PlusInstance::mor_from_base(ObjId src, ObjId dst, MorId base_f) {
    auto m = intern_checked(src, dst, base_f);
    if (!m)
        throw StructuralError(
            "pair morphism: base map does not satisfy the preimage "
            "condition between " +
            object_label(src) + " and " + object_label(dst));
    return *m;
}

std::optional<MorId> F1PlusInstance::intern_checked(ObjId src, ObjId dst,
                                                    MorId base_f) {
    if (base_.mor_src(base_f) != pairs_.at(src).first ||
        base_.mor_dst(base_f) != pairs_.at(dst).first)
        return std::nullopt;
    if (!preimage_ok(base_f, src, dst)) return std::nullopt;
    return intern(src, dst, base_f);
}

Mask F1PlusInstance::mask_image(MorId base_f, Mask sub) const {
    Mask out = 0;
    for (int a : base_.atoms_of(base_.mor_src(base_f)))
        if ((sub >> a) & 1) out |= Mask(1) << base_.apply_atom(base_f, a);
    return out;
}

MorId F1PlusInstance::z_restriction(MorId f) const {
    const Mor& m = mors_.at(f);
    return base_.restrict(m.base, z_mask(m.src), z_mask(m.dst));
}

MorId F1PlusInstance::y_restriction(MorId f) const {
    const Mor& m = mors_.at(f);
    return base_.restrict(m.base, y_mask(m.src), y_mask(m.dst));
}

MorId F1PlusInstance::s_mor(MorId f) { return z_restriction(f); }
MorId F1PlusInstance::q_mor(MorId f) { return y_restriction(f); }

MorId F1PlusInstance::identity(ObjId x) {
    return intern(x, x, base_.identity(pairs_.at(x).first));
}

MorId F1PlusInstance::compose(MorId f, MorId g) {
    const Mor& mf = mors_.at(f);
    const Mor& mg = mors_.at(g);
    if (mf.dst != mg.src)
        throw StructuralError("compose: morphisms do not align");
    return intern(mf.src, mg.dst, base_.compose(mf.base, mg.base));
}

std::vector<MorId> F1PlusInstance::hom(ObjId a, ObjId b) {
    auto it = hom_cache_.find({a, b});
    if (it != hom_cache_.end()) return it->second;
    std::vector<MorId> out;
    for (MorId bf : base_.hom(pairs_.at(a).first, pairs_.at(b).first))
        if (preimage_ok(bf, a, b)) out.push_back(intern(a, b, bf));
    hom_cache_[{a, b}] = out;
    return out;
}

bool F1PlusInstance::is_cof(MorId f) const {
    return base_.injective(mors_.at(f).base);
}
bool F1PlusInstance::is_fib(MorId f) const {
    return base_.injective(mors_.at(f).base);
}
bool F1PlusInstance::is_iso(MorId f) const {
    return base_.is_iso(mors_.at(f).base);
}

bool F1PlusInstance::is_weq(MorId f) const {
    return base_.is_weq(mors_.at(f).base) && base_.is_weq(z_restriction(f)) &&
           base_.is_weq(y_restriction(f));
}

std::vector<MorId> F1PlusInstance::cof_subobject_reps(ObjId x) {
    std::vector<MorId> out;
    for (MorId inc : base_.cof_subobject_reps(pairs_.at(x).first)) {
        const ObjId xp = base_.mor_src(inc);
        const ObjId zp = base_.require_object(z_mask(x) & base_.mask_of(xp));
        const ObjId pair = obj_of_pair(xp, zp);
        if (pair == kNoObj) continue;
        out.push_back(intern(pair, x, inc));
    }
    return out;
}

std::optional<SubtractionTriple> F1PlusInstance::subtraction(MorId cof) {
    const Mor& m = mors_.at(cof);
    if (!base_.injective(m.base)) return std::nullopt;
    auto bs = base_.subtraction(m.base);
    if (!bs) return std::nullopt;
    const Mask zc = z_mask(m.dst) & base_.mask_of(bs->complement);
    const ObjId z_obj = base_.obj_of_mask(zc);
    if (z_obj == kNoObj) return std::nullopt;
    const ObjId comp = obj_of_pair(bs->complement, z_obj);
    if (comp == kNoObj) return std::nullopt;
    auto leg = intern_checked(comp, m.dst, bs->leg);
    if (!leg) return std::nullopt;
    return SubtractionTriple{cof, *leg, comp};
}

bool F1PlusInstance::is_subtraction_triple(MorId cof, MorId leg) {
    const Mor& mc = mors_.at(cof);
    const Mor& ml = mors_.at(leg);
    if (mc.dst != ml.dst) return false;
    if (!base_.is_subtraction_triple(mc.base, ml.base)) return false;
    if (!base_.is_subtraction_triple(z_restriction(cof), z_restriction(leg)))
        return false;
    return base_.is_subtraction_triple(y_restriction(cof),
                                       y_restriction(leg));
}

std::optional<PushoutResult> F1PlusInstance::pushout(MorId c1, MorId c2) {
    const Mor& m1 = mors_.at(c1);
    const Mor& m2 = mors_.at(c2);
    if (m1.src != m2.src) return std::nullopt;
    auto po = base_.pushout(m1.base, m2.base);
    if (!po) return std::nullopt;
    const Mask zp = mask_image(po->from_left, z_mask(m1.dst)) |
                    mask_image(po->from_right, z_mask(m2.dst));
    const ObjId z_obj = base_.obj_of_mask(zp);
    if (z_obj == kNoObj) return std::nullopt;
    const ObjId apex = obj_of_pair(po->apex, z_obj);
    if (apex == kNoObj) return std::nullopt;
    auto l1 = intern_checked(m1.dst, apex, po->from_left);
    auto l2 = intern_checked(m2.dst, apex, po->from_right);
    if (!l1 || !l2) return std::nullopt;
    return PushoutResult{apex, *l1, *l2};
}

std::optional<MorId> F1PlusInstance::pushout_mediator(MorId c1, MorId c2,
                                                      const PushoutResult& p,
                                                      MorId f, MorId g) {
    const Mor& m1 = mors_.at(c1);
    const Mor& m2 = mors_.at(c2);
    PushoutResult base_p{pairs_.at(p.apex).first, base_mor(p.from_left),
                         base_mor(p.from_right)};
    auto u = base_.pushout_mediator(m1.base, m2.base, base_p, base_mor(f),
                                    base_mor(g));
    if (!u) return std::nullopt;
    return intern_checked(p.apex, mors_.at(f).dst, *u);
}

std::optional<PullbackResult> F1PlusInstance::pullback(MorId f, MorId g) {
    const Mor& mf = mors_.at(f);
    const Mor& mg = mors_.at(g);
    if (mf.dst != mg.dst) return std::nullopt;
    auto pb = base_.pullback(mf.base, mg.base);
    if (!pb) return std::nullopt;
    Mask zp = 0;
    const Mask za = z_mask(mf.src);
    for (int a : base_.atoms_of(pb->apex))
        if ((za >> base_.apply_atom(pb->to_left, a)) & 1)
            zp |= Mask(1) << a;
    const ObjId z_obj = base_.obj_of_mask(zp);
    if (z_obj == kNoObj) return std::nullopt;
    const ObjId apex = obj_of_pair(pb->apex, z_obj);
    if (apex == kNoObj) return std::nullopt;
    auto l = intern_checked(apex, mf.src, pb->to_left);
    auto r = intern_checked(apex, mg.src, pb->to_right);
    if (!l || !r) return std::nullopt;
    return PullbackResult{apex, *l, *r};
}

bool F1PlusInstance::is_cartesian(MorId p, MorId q, MorId f, MorId g) {
    return base_.is_cartesian(base_mor(p), base_mor(q), base_mor(f),
                              base_mor(g)) &&
           base_.is_cartesian(z_restriction(p), z_restriction(q),
                              z_restriction(f), z_restriction(g)) &&
           base_.is_cartesian(y_restriction(p), y_restriction(q),
                              y_restriction(f), y_restriction(g));
}

bool F1PlusInstance::is_cocartesian(MorId c1, MorId c2, MorId l1, MorId l2) {
    return base_.is_cocartesian(base_mor(c1), base_mor(c2), base_mor(l1),
                                base_mor(l2)) &&
           base_.is_cocartesian(z_restriction(c1), z_restriction(c2),
                                z_restriction(l1), z_restriction(l2)) &&
           base_.is_cocartesian(y_restriction(c1), y_restriction(c2),
                                y_restriction(l1), y_restriction(l2));
}

std::unique_ptr<F1PlusInstance> build_f1_plus(ConcreteSetInstance& base) {
    return std::make_unique<F1PlusInstance>(base);
}

}  // namespace swk

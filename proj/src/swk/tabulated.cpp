#include "swk/tabulated.hpp"

#include <json.hpp>

namespace swk {

using nlohmann::json;

ObjId TabulatedInstance::add_object(std::string label, int size,
                                    std::string iso_label) {
    labels_.push_back(label);
    iso_labels_.push_back(iso_label.empty() ? label : iso_label);
    sizes_.push_back(size);
    identities_.push_back(kNoMor);
    return (ObjId)labels_.size() - 1;
}

MorId TabulatedInstance::add_mor(ObjId src, ObjId dst, std::string name) {
    if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
        throw StructuralError("add_mor: dangling object id");
    if (name.empty())
        name = "m" + std::to_string(mors_.size());
    mors_.push_back({src, dst, std::move(name)});
    cof_.push_back(false);
    fib_.push_back(false);
    weq_.push_back(false);
    return (MorId)mors_.size() - 1;
}

void TabulatedInstance::set_composite(MorId f, MorId g, MorId gf) {
    comp_[{f, g}] = gf;
}

void TabulatedInstance::set_identity(ObjId x, MorId id) {
    identities_.at(x) = id;
}

void TabulatedInstance::add_triple(MorId cof, MorId leg) {
    triples_.push_back({cof, leg});
}

void TabulatedInstance::set_pushout(MorId c1, MorId c2, PushoutResult p) {
    pushouts_[{c1, c2}] = p;
}

void TabulatedInstance::set_pullback(MorId f, MorId g, PullbackResult p) {
    pullbacks_[{f, g}] = p;
}

void TabulatedInstance::finalize() {
    if (initial_ == kNoObj)
        throw StructuralError("tabulated instance: initial object not set");
    for (ObjId x = 0; x < object_count(); ++x) {
        MorId id = identities_[x];
        if (id == kNoMor)
            throw StructuralError("tabulated instance: no identity for object " +
                                  labels_[x]);
        if (mors_[id].src != x || mors_[id].dst != x)
            throw StructuralError("tabulated instance: bad identity for " +
                                  labels_[x]);
    }
    for (MorId f = 0; f < (MorId)mors_.size(); ++f)
        for (MorId g = 0; g < (MorId)mors_.size(); ++g) {
            if (mors_[f].dst != mors_[g].src) continue;
            auto it = comp_.find({f, g});
            if (it == comp_.end())
                throw StructuralError("composition table incomplete: " +
                                      mors_[g].name + " . " + mors_[f].name);
            MorId gf = it->second;
            if (mors_[gf].src != mors_[f].src || mors_[gf].dst != mors_[g].dst)
                throw StructuralError("composition table ill-typed: " +
                                      mors_[g].name + " . " + mors_[f].name);
        }
    // Units and associativity.
    for (MorId f = 0; f < (MorId)mors_.size(); ++f) {
        if (comp_[{identities_[mors_[f].src], f}] != f ||
            comp_[{f, identities_[mors_[f].dst]}] != f)
            throw StructuralError("identity is not a unit at " + mors_[f].name);
    }
    for (MorId f = 0; f < (MorId)mors_.size(); ++f)
        for (MorId g = 0; g < (MorId)mors_.size(); ++g) {
            if (mors_[f].dst != mors_[g].src) continue;
            for (MorId h = 0; h < (MorId)mors_.size(); ++h) {
                if (mors_[g].dst != mors_[h].src) continue;
                if (comp_[{comp_[{f, g}], h}] != comp_[{f, comp_[{g, h}]}])
                    throw StructuralError("composition not associative at " +
                                          mors_[f].name + "," + mors_[g].name +
                                          "," + mors_[h].name);
            }
        }
    finalized_ = true;
}

MorId TabulatedInstance::identity(ObjId x) { return identities_.at(x); }

MorId TabulatedInstance::compose(MorId f, MorId g) {
    if (mors_.at(f).dst != mors_.at(g).src)
        throw StructuralError("compose: morphisms not composable");
    auto it = comp_.find({f, g});
    if (it == comp_.end())
        throw StructuralError("composition table incomplete: " +
                              mors_[g].name + " . " + mors_[f].name);
    return it->second;
}

std::vector<MorId> TabulatedInstance::hom(ObjId a, ObjId b) {
    std::vector<MorId> out;
    for (MorId f = 0; f < (MorId)mors_.size(); ++f)
        if (mors_[f].src == a && mors_[f].dst == b) out.push_back(f);
    return out;
}

bool TabulatedInstance::is_iso(MorId f) const {
    ObjId a = mors_.at(f).src, b = mors_.at(f).dst;
    for (MorId g = 0; g < (MorId)mors_.size(); ++g) {
        if (mors_[g].src != b || mors_[g].dst != a) continue;
        auto fg = comp_.find({f, g});
        auto gf = comp_.find({g, f});
        if (fg != comp_.end() && gf != comp_.end() &&
            fg->second == identities_[a] && gf->second == identities_[b])
            return true;
    }
    return false;
}

std::vector<MorId> TabulatedInstance::cof_subobject_reps(ObjId x) {
    std::vector<MorId> out;
    for (MorId f = 0; f < (MorId)mors_.size(); ++f)
        if (mors_[f].dst == x && cof_[f]) out.push_back(f);
    return out;
}

std::vector<MorId> TabulatedInstance::fib_into_reps(ObjId x) {
    std::vector<MorId> out;
    for (MorId f = 0; f < (MorId)mors_.size(); ++f)
        if (mors_[f].dst == x && fib_[f]) out.push_back(f);
    return out;
}

std::optional<SubtractionTriple> TabulatedInstance::subtraction(MorId cof) {
    for (const auto& [c, leg] : triples_)
        if (c == cof) return SubtractionTriple{c, leg, mors_[leg].src};
    return std::nullopt;
}

bool TabulatedInstance::is_subtraction_triple(MorId cof, MorId leg) {
    for (const auto& [c, l] : triples_)
        if (c == cof && l == leg) return true;
    return false;
}

std::optional<PushoutResult> TabulatedInstance::pushout(MorId c1, MorId c2) {
    auto it = pushouts_.find({c1, c2});
    if (it != pushouts_.end()) return it->second;
    // Also accept the mirrored cospan.
    it = pushouts_.find({c2, c1});
    if (it != pushouts_.end())
        return PushoutResult{it->second.apex, it->second.from_right,
                             it->second.from_left};
    return std::nullopt;
}

std::optional<MorId> TabulatedInstance::pushout_mediator(
    MorId c1, MorId c2, const PushoutResult& p, MorId f, MorId g) {
    (void)c1;
    (void)c2;
    for (MorId u = 0; u < (MorId)mors_.size(); ++u) {
        if (mors_[u].src != p.apex || mors_[u].dst != mors_[f].dst) continue;
        if (compose(p.from_left, u) == f && compose(p.from_right, u) == g)
            return u;
    }
    return std::nullopt;
}

std::optional<PullbackResult> TabulatedInstance::pullback(MorId f, MorId g) {
    auto it = pullbacks_.find({f, g});
    if (it != pullbacks_.end()) return it->second;
    it = pullbacks_.find({g, f});
    if (it != pullbacks_.end())
        return PullbackResult{it->second.apex, it->second.to_right,
                              it->second.to_left};
    return std::nullopt;
}

bool TabulatedInstance::is_cartesian(MorId p, MorId q, MorId f, MorId g) {
    if (mors_[p].src != mors_[q].src) return false;
    if (mors_[p].dst != mors_[f].src || mors_[q].dst != mors_[g].src)
        return false;
    if (mors_[f].dst != mors_[g].dst) return false;
    if (compose(p, f) != compose(q, g)) return false;
    ObjId apex = mors_[p].src;
    for (ObjId w = 0; w < object_count(); ++w)
        for (MorId u : hom(w, mors_[f].src))
            for (MorId v : hom(w, mors_[g].src)) {
                if (compose(u, f) != compose(v, g)) continue;
                int count = 0;
                for (MorId m : hom(w, apex))
                    if (compose(m, p) == u && compose(m, q) == v) ++count;
                if (count != 1) return false;
            }
    return true;
}

bool TabulatedInstance::is_cocartesian(MorId c1, MorId c2, MorId l1,
                                       MorId l2) {
    if (mors_[c1].src != mors_[c2].src) return false;
    if (mors_[l1].dst != mors_[l2].dst) return false;
    if (mors_[c1].dst != mors_[l1].src || mors_[c2].dst != mors_[l2].src)
        return false;
    if (compose(c1, l1) != compose(c2, l2)) return false;
    ObjId apex = mors_[l1].dst;
    for (ObjId w = 0; w < object_count(); ++w)
        for (MorId u : hom(mors_[c1].dst, w))
            for (MorId v : hom(mors_[c2].dst, w)) {
                if (compose(c1, u) != compose(c2, v)) continue;
                int count = 0;
                for (MorId m : hom(apex, w))
                    if (compose(l1, m) == u && compose(l2, m) == v) ++count;
                if (count != 1) return false;
            }
    return true;
}

// --- serialization -------------------------------------------------------

std::string TabulatedInstance::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["objects"] = json::array();
    for (ObjId x = 0; x < object_count(); ++x)
        j["objects"].push_back({{"label", labels_[x]},
                                {"iso_label", iso_labels_[x]},
                                {"size", sizes_[x]}});
    j["initial"] = initial_;
    j["morphisms"] = json::array();
    for (const auto& m : mors_)
        j["morphisms"].push_back(
            {{"src", m.src}, {"dst", m.dst}, {"name", m.name}});
    j["identities"] = identities_;
    json comp = json::array();
    for (const auto& [fg, gf] : comp_)
        comp.push_back({fg.first, fg.second, gf});
    j["composition"] = comp;
    auto bits = [](const std::vector<bool>& v) {
        std::vector<int> out;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) out.push_back((int)i);
        return out;
    };
    j["cofibrations"] = bits(cof_);
    j["fibrations"] = bits(fib_);
    j["weak_equivalences"] = bits(weq_);
    json tr = json::array();
    for (const auto& [c, l] : triples_) tr.push_back({c, l});
    j["subtraction_triples"] = tr;
    json po = json::array();
    for (const auto& [k, p] : pushouts_)
        po.push_back({k.first, k.second, p.apex, p.from_left, p.from_right});
    j["pushout_choice"] = po;
    json pb = json::array();
    for (const auto& [k, p] : pullbacks_)
        pb.push_back({k.first, k.second, p.apex, p.to_left, p.to_right});
    j["pullback_choice"] = pb;
    return j.dump(2);
}

TabulatedInstance TabulatedInstance::from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
        throw StructuralError("tabulated instance: unsupported schema version");
    TabulatedInstance t;
    for (const auto& o : j.at("objects"))
        t.add_object(o.at("label").get<std::string>(), o.at("size").get<int>(),
                     o.value("iso_label", ""));
    for (const auto& m : j.at("morphisms"))
        t.add_mor(m.at("src").get<ObjId>(), m.at("dst").get<ObjId>(),
                  m.value("name", ""));
    t.set_initial(j.at("initial").get<ObjId>());
    auto ids = j.at("identities").get<std::vector<MorId>>();
    for (ObjId x = 0; x < (ObjId)ids.size(); ++x) t.set_identity(x, ids[x]);
    for (const auto& c : j.at("composition"))
        t.set_composite(c.at(0).get<MorId>(), c.at(1).get<MorId>(),
                        c.at(2).get<MorId>());
    for (const auto& f : j.at("cofibrations")) t.mark_cof(f.get<MorId>());
    for (const auto& f : j.at("fibrations")) t.mark_fib(f.get<MorId>());
    for (const auto& f : j.at("weak_equivalences")) t.mark_weq(f.get<MorId>());
    for (const auto& tr : j.at("subtraction_triples"))
        t.add_triple(tr.at(0).get<MorId>(), tr.at(1).get<MorId>());
    for (const auto& p : j.at("pushout_choice"))
        t.set_pushout(p.at(0).get<MorId>(), p.at(1).get<MorId>(),
                      PushoutResult{p.at(2).get<ObjId>(), p.at(3).get<MorId>(),
                                    p.at(4).get<MorId>()});
    for (const auto& p : j.at("pullback_choice"))
        t.set_pullback(p.at(0).get<MorId>(), p.at(1).get<MorId>(),
                       PullbackResult{p.at(2).get<ObjId>(), p.at(3).get<MorId>(),
                                      p.at(4).get<MorId>()});
    t.finalize();
    return t;
}

TabulatedInstance tabulate(SwCategory& c, int bound) {
    TabulatedInstance t;
    std::vector<ObjId> objs = c.objects_within(bound);
    std::map<ObjId, ObjId> omap;
    for (ObjId x : objs)
        omap[x] = t.add_object(c.object_label(x), c.object_size(x),
                               c.canonical_label(x));
    std::map<MorId, MorId> mmap;
    std::vector<MorId> all;
    for (ObjId a : objs)
        for (ObjId b : objs)
            for (MorId f : c.hom(a, b)) {
                mmap[f] = t.add_mor(omap[a], omap[b]);
                all.push_back(f);
            }
    t.set_initial(omap.at(c.initial_object()));
    for (ObjId x : objs) t.set_identity(omap[x], mmap.at(c.identity(x)));
    for (MorId f : all)
        for (MorId g : all) {
            if (c.mor_dst(f) != c.mor_src(g)) continue;
            t.set_composite(mmap[f], mmap[g], mmap.at(c.compose(f, g)));
        }
    for (MorId f : all) {
        t.mark_cof(mmap[f], c.is_cof(f));
        t.mark_fib(mmap[f], c.is_fib(f));
        t.mark_weq(mmap[f], c.is_weq(f));
        if (c.is_cof(f))
            for (MorId l : all)
                if (c.is_subtraction_triple(f, l)) t.add_triple(mmap[f], mmap[l]);
    }
    for (MorId c1 : all)
        for (MorId c2 : all) {
            if (!c.is_cof(c1) || !c.is_cof(c2)) continue;
            if (c.mor_src(c1) != c.mor_src(c2)) continue;
            auto p = c.pushout(c1, c2);
            if (p && omap.count(p->apex))
                t.set_pushout(mmap[c1], mmap[c2],
                              PushoutResult{omap[p->apex], mmap.at(p->from_left),
                                            mmap.at(p->from_right)});
        }
    for (MorId f : all)
        for (MorId g : all) {
            if (c.mor_dst(f) != c.mor_dst(g)) continue;
            if (!c.is_cof(g) && !c.is_fib(g)) continue;
            auto p = c.pullback(f, g);
            if (p && omap.count(p->apex))
                t.set_pullback(mmap[f], mmap[g],
                               PullbackResult{omap[p->apex], mmap.at(p->to_left),
                                              mmap.at(p->to_right)});
        }
    t.finalize();
    return t;
}

}  // namespace swk

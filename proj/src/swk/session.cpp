#include "swk/session.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "swk/additivity.hpp"
#include "swk/checkers.hpp"
#include "swk/f1plus.hpp"
#include "swk/flag.hpp"
#include "swk/functors.hpp"
#include "swk/k0.hpp"
#include "swk/poly.hpp"
#include "swk/snf.hpp"

namespace swk {

using nlohmann::json;

namespace {

json violations_json(const CheckReport& r) {
    json arr = json::array();
    for (const auto& v : r.violations)
        arr.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
    return arr;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

CommandResult finish(const SessionOptions& opts, int status, json j,
                     const std::string& text) {
    if (!opts.json) return {status, text};
    j["schema_version"] = 1;
    j["status"] = status;
    return {status, render(j)};
}

std::string text_report(const std::string& head, const CheckReport& r) {
    std::ostringstream os;
    os << head << "\n" << r.summary() << "\n";
    return os.str();
}

void merge(CheckReport& into, const CheckReport& from) {
    into.configurations += from.configurations;
    for (const auto& v : from.violations) into.violations.push_back(v);
}

std::vector<Int> class_sum(const std::vector<Int>& a,
                           const std::vector<Int>& b, const K0Group& g) {
    std::vector<Int> raw(a.size());
    for (size_t i = 0; i < a.size(); ++i) raw[i] = a[i] + b[i];
    // renormalize torsion coordinates
    for (size_t i = 0; i < g.torsion.size() && i < raw.size(); ++i)
        raw[i] = ((raw[i] % g.torsion[i]) + g.torsion[i]) % g.torsion[i];
    return raw;
}

json coords_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

}  // namespace

long long default_point_budget() {
    if (const char* env = std::getenv("SWK_POINT_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultPointBudget;
}

Session::Session(SessionOptions opts) : opts_(std::move(opts)) {
    if (opts_.budget <= 0) opts_.budget = default_point_budget();
    if (opts_.bound < 0 || opts_.degree < 0)
        throw StructuralError("session: bounds must be non-negative");
    const SessionConfig& c = opts_.config;
    switch (c.kind) {
        case InstanceKind::FinSet:
            inst_ = std::make_unique<ConcreteSetInstance>(
                ConcreteSetInstance::finset(c.universe));
            break;
        case InstanceKind::GSet:
            inst_ = std::make_unique<ConcreteSetInstance>(
                ConcreteSetInstance::gset(intern_group(*c.group), c.universe));
            break;
        case InstanceKind::Varieties: {
            long long window = 1;
            for (size_t i = 0; i < c.vars.size(); ++i) {
                window *= c.field;
                if (window > 64)
                    throw StructuralError(
                        "varieties window has more than 64 points; shrink "
                        "the field or the variable count");
            }
            inst_ = std::make_unique<ConcreteSetInstance>(
                ConcreteSetInstance::varieties_window(c.field,
                                                      (int)c.vars.size()));
            break;
        }
    }
}

std::string Session::instance_name() const {
    const SessionConfig& c = opts_.config;
    switch (c.kind) {
        case InstanceKind::FinSet:
            return "finset(" + std::to_string(c.universe) + ")";
        case InstanceKind::GSet:
            return "gset(order " + std::to_string(c.group->order) + ", " +
                   std::to_string(c.universe) + ")";
        case InstanceKind::Varieties:
            return "varieties(F_" + std::to_string(c.field) + ", " +
                   std::to_string(c.vars.size()) + " vars)";
    }
    return "?";
}

CommandResult Session::run(const std::string& command) {
    try {
        if (command == "axioms") return cmd_axioms();
        if (command == "flags") return cmd_flags();
        if (command == "k0") return cmd_k0();
        if (command == "snf") return cmd_snf();
        if (command == "measure") return cmd_measure();
        if (command == "additivity") return cmd_additivity();
        if (command == "splitting") return cmd_splitting();
        return finish(opts_, kStatusUsage,
                      {{"command", command},
                       {"error", "unknown command '" + command + "'"}},
                      "unknown command '" + command + "'\n");
    } catch (const BudgetError& e) {
        return finish(opts_, kStatusBudget,
                      {{"command", command}, {"error", e.message}},
                      std::string(e.message) + "\n");
    } catch (const StructuralError& e) {
        return finish(opts_, kStatusUsage,
                      {{"command", command}, {"error", e.message}},
                      std::string(e.message) + "\n");
    }
}

CommandResult Session::cmd_axioms() {
    CheckReport r = check_subtraction_axioms(*inst_, opts_.bound);
    merge(r, check_subtractive_axioms(*inst_, opts_.bound));
    merge(r, check_sw_axioms(*inst_, opts_.bound));
    r.normalize();
    int status = r.ok() ? kStatusOk : kStatusViolations;
    json j{{"command", "axioms"},
           {"instance", instance_name()},
           {"bound", opts_.bound},
           {"configurations", r.configurations},
           {"violations", violations_json(r)}};
    return finish(opts_, status, j,
                  text_report("axioms: " + instance_name() + ", bound " +
                                  std::to_string(opts_.bound),
                              r));
}

CommandResult Session::cmd_flags() {
    CheckReport r;
    long long flag_count = 0, identities = 0;
    for (int n = 0; n <= opts_.degree; ++n) {
        auto flags = enumerate_flags(*inst_, n);
        flag_count += (long long)flags.size();
        for (const auto& f : flags) {
            merge(r, validate_flag(*inst_, f));
            if (n == 0) continue;
            std::vector<Flag> faces;
            for (int k = 0; k <= n; ++k) faces.push_back(face(*inst_, f, k));
            for (int i = 0; i < (int)faces.size(); ++i)
                merge(r, validate_flag(*inst_, faces[i]));
            // d_i d_j = d_{j-1} d_i for i < j (both sides need degree >= 2)
            for (int j = 1; n >= 2 && j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    ++identities;
                    if (!(face(*inst_, faces[j], i) ==
                          face(*inst_, faces[i], j - 1)))
                        r.add("simplicial d_i d_j",
                              "degree " + std::to_string(n) + ", i=" +
                                  std::to_string(i) + ", j=" +
                                  std::to_string(j));
                }
            // s_i s_j = s_{j+1} s_i for i <= j, and the d_i s_j relations
            for (int j = 0; j <= n; ++j) {
                Flag sj = degeneracy(*inst_, f, j);
                merge(r, validate_flag(*inst_, sj));
                for (int i = 0; i <= j; ++i) {
                    ++identities;
                    if (!(degeneracy(*inst_, degeneracy(*inst_, f, j), i) ==
                          degeneracy(*inst_, degeneracy(*inst_, f, i),
                                     j + 1)))
                        r.add("simplicial s_i s_j",
                              "degree " + std::to_string(n) + ", i=" +
                                  std::to_string(i) + ", j=" +
                                  std::to_string(j));
                }
                for (int i = 0; i <= n + 1; ++i) {
                    ++identities;
                    Flag lhs = face(*inst_, sj, i);
                    bool good;
                    if (i < j)
                        good = lhs == degeneracy(*inst_, face(*inst_, f, i),
                                                 j - 1);
                    else if (i == j || i == j + 1)
                        good = lhs == f;
                    else
                        good = lhs == degeneracy(*inst_,
                                                 face(*inst_, f, i - 1), j);
                    if (!good)
                        r.add("simplicial d_i s_j",
                              "degree " + std::to_string(n) + ", i=" +
                                  std::to_string(i) + ", j=" +
                                  std::to_string(j));
                }
            }
        }
        r.configurations += (long long)flags.size();
    }
    r.normalize();
    int status = r.ok() ? kStatusOk : kStatusViolations;
    json j{{"command", "flags"},
           {"instance", instance_name()},
           {"degree", opts_.degree},
           {"flag_count", flag_count},
           {"identities_checked", identities},
           {"violations", violations_json(r)}};
    std::ostringstream os;
    os << "flags: " << instance_name() << ", degree <= " << opts_.degree
       << "\n"
       << flag_count << " flags, " << identities << " identities\n"
       << r.summary() << "\n";
    return finish(opts_, status, j, os.str());
}

CommandResult Session::cmd_k0() {
    K0Group g = k0_group(*inst_, (size_t)opts_.bound);
    bool certified = snf_certified(g.pres.relations, g.snf);
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    json j{{"command", "k0"},
           {"instance", instance_name()},
           {"bound", opts_.bound},
           {"free_rank", g.free_rank},
           {"torsion", torsion},
           {"generators", (long long)g.pres.classes.labels.size()},
           {"relations", (long long)g.pres.relations.size()},
           {"certified", certified}};
    std::ostringstream os;
    os << "k0: " << instance_name() << ", bound " << opts_.bound << "\n"
       << "free rank " << g.free_rank << ", torsion [";
    for (size_t i = 0; i < g.torsion.size(); ++i)
        os << (i ? ", " : "") << g.torsion[i];
    os << "], certificate " << (certified ? "ok" : "FAILED") << "\n";
    return finish(opts_, certified ? kStatusOk : kStatusViolations, j,
                  os.str());
}

CommandResult Session::cmd_snf() {
    Presentation pres = k0_presentation(*inst_, (size_t)opts_.bound);
    SnfResult r = smith_normal_form(pres.relations);
    bool certified = snf_certified(pres.relations, r);
    json diag = json::array();
    for (const auto& d : r.diagonal()) diag.push_back(d.str());
    json j{{"command", "snf"},
           {"instance", instance_name()},
           {"bound", opts_.bound},
           {"rows", (long long)pres.relations.size()},
           {"cols",
            (long long)(pres.relations.empty() ? pres.classes.labels.size()
                                               : pres.relations[0].size())},
           {"diagonal", diag},
           {"certified", certified}};
    std::ostringstream os;
    os << "snf: " << instance_name() << ", bound " << opts_.bound << "\n"
       << "diagonal [";
    auto d = r.diagonal();
    for (size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
    os << "], certificate " << (certified ? "ok" : "FAILED") << "\n";
    return finish(opts_, certified ? kStatusOk : kStatusViolations, j,
                  os.str());
}

CommandResult Session::cmd_measure() {
    const SessionConfig& c = opts_.config;
    if (c.kind != InstanceKind::Varieties || c.sets.empty()) {
        std::string msg =
            "measure requires a varieties session with at least one set";
        return finish(opts_, kStatusUsage,
                      {{"command", "measure"}, {"error", msg}}, msg + "\n");
    }
    // Classes over the whole window so every declared set has coordinates.
    K0Group g = k0_group(*inst_, (size_t)inst_->universe_size());
    CheckReport r;
    json sets = json::array();
    long long certificates = 0;
    int first_count = -1;
    std::vector<Int> first_class;
    std::ostringstream os;
    os << "measure: " << instance_name() << "\n";
    for (const auto& s : c.sets) {
        ConstructibleSet x = realize_set(s, opts_.budget);
        ObjId wobj = window_object(x, *inst_);
        std::vector<Int> cls;
        if (wobj != kNoObj) cls = g.class_of_object(*inst_, wobj);
        long long set_certs = 0;
        for (size_t v = 0; v < c.vars.size(); ++v) {
            Poly xv = Poly::variable(c.field, (int)c.vars.size(), (int)v);
            auto [z, imm] = closed_subset(x, {xv});
            VarTriple tr = subtraction_sequence_of(imm);
            ++r.configurations;
            if (tr.z.point_count() + tr.complement.point_count() !=
                x.point_count()) {
                r.add("excision",
                      "set '" + s.name + "', hyperplane " + c.vars[v] +
                          " = 0: point counts do not add up");
                continue;
            }
            ObjId wz = window_object(tr.z, *inst_);
            ObjId wc = window_object(tr.complement, *inst_);
            if (wobj != kNoObj && wz != kNoObj && wc != kNoObj) {
                auto sum = class_sum(g.class_of_object(*inst_, wz),
                                     g.class_of_object(*inst_, wc), g);
                if (sum != cls) {
                    r.add("excision",
                          "set '" + s.name + "', hyperplane " + c.vars[v] +
                              " = 0: [Z] + [X-Z] differs from [X]");
                    continue;
                }
            }
            ++set_certs;
        }
        certificates += set_certs;
        if (first_count < 0) {
            first_count = x.point_count();
            first_class = cls;
        }
        sets.push_back({{"name", s.name},
                        {"point_count", x.point_count()},
                        {"k0_class", coords_json(cls)},
                        {"in_window", wobj != kNoObj},
                        {"excision_certificates", set_certs}});
        os << s.name << ": " << x.point_count() << " points, class [";
        for (size_t i = 0; i < cls.size(); ++i)
            os << (i ? ", " : "") << cls[i];
        os << "], " << set_certs << " excision certificates\n";
    }
    r.normalize();
    os << r.summary() << "\n";
    int status = r.ok() ? kStatusOk : kStatusViolations;
    json j{{"command", "measure"},
           {"instance", instance_name()},
           {"point_count", first_count},
           {"k0_class", coords_json(first_class)},
           {"excision_certificates", certificates},
           {"sets", sets},
           {"violations", violations_json(r)}};
    return finish(opts_, status, j, os.str());
}

CommandResult Session::cmd_additivity() {
    if (opts_.golden_appendix) {
        ConcreteSetInstance base = ConcreteSetInstance::finset(6);
        F1PlusInstance fp(base);
        return {kStatusOk, appendix_h3_json(fp)};
    }
    // The homotopy runs over dedicated finite-set bases sized so every
    // canonical pushout it needs exists (objects over u atoms inside a
    // 2u-atom base).
    HomotopyReport total;
    {
        ConcreteSetInstance base = ConcreteSetInstance::finset(4);
        F1PlusInstance fp(base);
        std::vector<AddElement> corpus;
        for (int m = 0; m <= 1; ++m)
            for (int n = 0; n <= 1; ++n) {
                auto part = enumerate_add_elements(fp, m, n, 2);
                corpus.insert(corpus.end(), part.begin(), part.end());
            }
        HomotopyReport r = verify_homotopy(fp, corpus);
        total.elements_checked += r.elements_checked;
        total.identities_checked += r.identities_checked;
        total.strict += r.strict;
        total.up_to_iso += r.up_to_iso;
        merge(total.report, r.report);
    }
    {
        ConcreteSetInstance base = ConcreteSetInstance::finset(6);
        F1PlusInstance fp(base);
        auto corpus = random_add_elements(fp, 3, 50, opts_.seed, 2, 2);
        HomotopyReport r = verify_homotopy(fp, corpus);
        total.elements_checked += r.elements_checked;
        total.identities_checked += r.identities_checked;
        total.strict += r.strict;
        total.up_to_iso += r.up_to_iso;
        merge(total.report, r.report);
    }
    total.report.normalize();
    int status = total.report.ok() ? kStatusOk : kStatusViolations;
    json j{{"command", "additivity"},
           {"seed", opts_.seed},
           {"elements_checked", total.elements_checked},
           {"identities_checked", total.identities_checked},
           {"strict", total.strict},
           {"up_to_iso", total.up_to_iso},
           {"failures", (long long)total.report.violations.size()},
           {"violations", violations_json(total.report)}};
    std::ostringstream os;
    os << "additivity: " << total.elements_checked << " elements, "
       << total.identities_checked << " identities (" << total.strict
       << " strict, " << total.up_to_iso << " up to iso)\n"
       << total.report.summary() << "\n";
    return finish(opts_, status, j, os.str());
}

CommandResult Session::cmd_splitting() {
    SplittingReport s = check_splitting(*inst_, opts_.bound);
    int status =
        (s.report.ok() && s.strict) ? kStatusOk : kStatusViolations;
    json j{{"command", "splitting"},
           {"instance", instance_name()},
           {"bound", opts_.bound},
           {"strict", s.strict},
           {"up_to_iso", s.up_to_iso},
           {"configurations", s.report.configurations},
           {"violations", violations_json(s.report)}};
    std::ostringstream os;
    os << "splitting: " << instance_name() << ", bound " << opts_.bound
       << "\ncomposite is " << (s.strict ? "the identity on the nose"
                                         : "NOT strictly the identity")
       << "\n"
       << s.report.summary() << "\n";
    return finish(opts_, status, j, os.str());
}

}  // namespace swk

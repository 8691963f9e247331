#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "swk/swk.h"

namespace {

struct Options {
    std::string command;
    std::string script;
    std::string instance = "finset";
    int field = 0;
    int vars = 2;
    int universe = 0;
    int bound = 3;
    int degree = 2;
    unsigned seed = 1;
    long long budget = 0;
    bool json = false;
    bool golden_appendix = false;
};

// Synthesize the session script that the flag-only invocation describes.
std::string script_from_flags(const Options& o, std::string& err) {
    std::ostringstream os;
    if (o.instance == "finset") {
        os << "universe " << (o.universe > 0 ? o.universe : std::max(3, o.bound))
           << ";\n";
    } else if (o.instance == "gset") {
        os << "group { table: 0, 1; 1, 0; }\n";
        os << "universe " << (o.universe > 0 ? o.universe : std::max(3, o.bound))
           << ";\n";
    } else if (o.instance == "varieties") {
        if (o.field == 0) {
            err = "--instance varieties requires --field";
            return "";
        }
        os << "field " << o.field << ";\nvar ";
        for (int i = 1; i <= o.vars; ++i)
            os << (i > 1 ? ", " : "") << "x" << i;
        os << ";\n";
    } else {
        err = "unknown instance '" + o.instance +
              "' (expected finset, gset or varieties)";
        return "";
    }
    return os.str();
}

int run(const Options& o) {
    std::string text;
    if (!o.script.empty()) {
        std::ifstream in(o.script);
        if (!in) {
            std::cerr << "cannot read script '" << o.script << "'\n";
            return SWK_STATUS_USAGE;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::string err;
        text = script_from_flags(o, err);
        if (!err.empty()) {
            std::cerr << err << "\n";
            return SWK_STATUS_USAGE;
        }
    }

    char* err = nullptr;
    swk_session* s = swk_session_create(text.c_str(), &err);
    if (!s) {
        std::cerr << (err ? err : "session creation failed") << "\n";
        swk_string_free(err);
        return SWK_STATUS_USAGE;
    }
    swk_session_set_bound(s, o.bound);
    swk_session_set_degree(s, o.degree);
    swk_session_set_seed(s, o.seed);
    swk_session_set_json(s, o.json ? 1 : 0);
    swk_session_set_golden_appendix(s, o.golden_appendix ? 1 : 0);
    swk_session_set_budget(s, o.budget);

    char* out = nullptr;
    int status = swk_session_run(s, o.command.c_str(), &out);
    if (out) std::fputs(out, stdout);
    swk_string_free(out);
    swk_session_destroy(s);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subtractive K-theory workbench"};
    app.require_subcommand(1);

    Options o;
    const char* commands[] = {"axioms",  "flags",      "k0",       "snf",
                              "measure", "additivity", "splitting"};
    const char* descriptions[] = {
        "check the subtraction / subtractive / SW axiom suites",
        "validate flags and their simplicial identities",
        "compute K_0 with a certified Smith normal form",
        "print the Smith normal form of the K_0 presentation",
        "point counts, K_0 classes and excision certificates of the "
        "declared sets",
        "run the additivity homotopy identity table",
        "check the sphere-splitting composite"};
    for (size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("script", o.script,
                        "session script (overrides the instance flags)");
        sub->add_option("--instance", o.instance,
                        "finset | gset | varieties (default finset)");
        sub->add_option("--field", o.field, "field characteristic (prime)");
        sub->add_option("--vars", o.vars,
                        "variable count for --instance varieties");
        sub->add_option("--universe", o.universe, "atom universe size");
        sub->add_option("--bound", o.bound, "object-size bound");
        sub->add_option("--degree", o.degree, "simplicial-degree bound");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--budget", o.budget,
                        "point-enumeration budget (default: "
                        "SWK_POINT_BUDGET or 10^7)");
        sub->add_flag("--json", o.json, "emit a JSON report");
        if (std::string(commands[i]) == "additivity")
            sub->add_flag("--golden-appendix", o.golden_appendix,
                          "emit the worked 5-simplex h_3 grids as JSON");
        sub->callback([&o, name = std::string(commands[i])] {
            o.command = name;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return SWK_STATUS_USAGE;
    }
    return run(o);
}

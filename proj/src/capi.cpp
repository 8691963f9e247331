#include "swk/swk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "swk/core.hpp"
#include "swk/dsl.hpp"
#include "swk/session.hpp"

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

}  // namespace

struct swk_session {
    swk::SessionOptions opts;
};

extern "C" {

swk_session* swk_session_create(const char* dsl_text, char** err) {
    if (err) *err = nullptr;
    try {
        swk::SessionOptions opts;
        opts.config = swk::parse_dsl(dsl_text ? dsl_text : "");
        // Validate instance construction eagerly so errors surface here.
        swk::Session probe(opts);
        return new swk_session{std::move(opts)};
    } catch (const swk::StructuralError& e) {
        set_err(err, e.message);
    } catch (const std::bad_alloc&) {
        set_err(err, "out of memory");
    } catch (const std::exception& e) {
        set_err(err, e.what());
    }
    return nullptr;
}

void swk_session_destroy(swk_session* s) { delete s; }

int swk_session_set_bound(swk_session* s, int bound) {
    if (!s || bound < 0) return SWK_STATUS_USAGE;
    s->opts.bound = bound;
    return SWK_STATUS_OK;
}

int swk_session_set_degree(swk_session* s, int degree) {
    if (!s || degree < 0) return SWK_STATUS_USAGE;
    s->opts.degree = degree;
    return SWK_STATUS_OK;
}

void swk_session_set_seed(swk_session* s, unsigned seed) {
    if (s) s->opts.seed = seed;
}

void swk_session_set_json(swk_session* s, int json) {
    if (s) s->opts.json = json != 0;
}

void swk_session_set_golden_appendix(swk_session* s, int on) {
    if (s) s->opts.golden_appendix = on != 0;
}

void swk_session_set_budget(swk_session* s, long long budget) {
    if (s) s->opts.budget = budget > 0 ? budget : 0;
}

int swk_session_run(swk_session* s, const char* command, char** out) {
    if (out) *out = nullptr;
    if (!s || !command) return SWK_STATUS_USAGE;
    try {
        swk::Session session(s->opts);
        swk::CommandResult r = session.run(command);
        if (out) *out = dup_string(r.output);
        return r.status;
    } catch (const swk::BudgetError& e) {
        if (out) *out = dup_string(e.message + "\n");
        return SWK_STATUS_BUDGET;
    } catch (const swk::StructuralError& e) {
        if (out) *out = dup_string(e.message + "\n");
        return SWK_STATUS_USAGE;
    } catch (const std::exception& e) {
        if (out) *out = dup_string(std::string(e.what()) + "\n");
        return SWK_STATUS_USAGE;
    }
}

char* swk_session_instance_name(const swk_session* s) {
    if (!s) return nullptr;
    try {
        swk::Session session(s->opts);
        return dup_string(session.instance_name());
    } catch (const std::exception&) {
        return nullptr;
    }
}

void swk_string_free(char* p) { std::free(p); }

}  // extern "C"

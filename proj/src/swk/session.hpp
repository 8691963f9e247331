#pragma once

#include <memory>
#include <string>

#include "swk/concrete.hpp"
#include "swk/dsl.hpp"

namespace swk {

// Status codes shared by the C API and the CLI exit codes.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusViolations = 1;
inline constexpr int kStatusUsage = 2;
inline constexpr int kStatusBudget = 3;

// Point-enumeration budget: SWK_POINT_BUDGET overrides the built-in
// default when set to a positive integer.
long long default_point_budget();

struct SessionOptions {
    SessionConfig config;
    int bound = 3;    // object-size bound for the checker commands
    int degree = 2;   // simplicial-degree bound for the flag commands
    unsigned seed = 1;
    bool json = false;
    bool golden_appendix = false;
    long long budget = 0;  // 0: use default_point_budget()
};

struct CommandResult {
    int status = kStatusUsage;
    std::string output;  // report text or JSON, newline-terminated
};

// A live instance built from a session config, plus the command runners.
// Reports are deterministic: identical options produce identical bytes.
class Session {
public:
    explicit Session(SessionOptions opts);  // throws StructuralError

    ConcreteSetInstance& instance() { return *inst_; }
    const SessionOptions& options() const { return opts_; }
    std::string instance_name() const;

    // command: axioms | flags | k0 | snf | measure | additivity | splitting
    CommandResult run(const std::string& command);

private:
    CommandResult cmd_axioms();
    CommandResult cmd_flags();
    CommandResult cmd_k0();
    CommandResult cmd_snf();
    CommandResult cmd_measure();
    CommandResult cmd_additivity();
    CommandResult cmd_splitting();

    SessionOptions opts_;
    std::unique_ptr<ConcreteSetInstance> inst_;
};

}  // namespace swk

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"
#include "swk/poly.hpp"

namespace swk {

// Which concrete instance a session script describes.  A `group` block
// selects G-sets, a `field` declaration selects a varieties window, and an
// empty script falls back to plain finite sets.
enum class InstanceKind { FinSet, GSet, Varieties };

// A constructible set declared with `set NAME { eq: ...; neq: ...; }`.
// Equations cut the closed part; each neq entry contributes one clause
// (at least one member nonzero).
struct NamedSet {
    std::string name;
    PolySystem system;

    bool operator==(const NamedSet& o) const {
        return name == o.name && system.prime == o.system.prime &&
               system.nvars == o.system.nvars &&
               system.equations == o.system.equations &&
               system.inequations == o.system.inequations;
    }
};

// Parsed session description.  `universe` sizes the finite-set / G-set
// instances; `field` is 0 until a `field p` statement appears.
struct SessionConfig {
    InstanceKind kind = InstanceKind::FinSet;
    int universe = 3;
    int field = 0;
    std::vector<std::string> vars;
    std::optional<GroupTable> group;
    std::vector<NamedSet> sets;

    bool operator==(const SessionConfig& o) const;
};

// Parse error with its position and the token set that would have been
// accepted; the formatted message carries all three.
struct DslError : StructuralError {
    int line = 0;
    int column = 0;
    std::vector<std::string> expected;

    DslError(int line, int column, std::string detail,
             std::vector<std::string> expected = {});
};

// Parse a session script.  Statements are `field p`, `var x, y`,
// `universe n`, `set NAME { eq: <poly>; neq: <poly>, <poly>; }` and
// `group { table: 0, 1; 1, 0; }`, separated by `;`.  `#` starts a comment.
// The empty script yields the default finite-set session (universe 3).
SessionConfig parse_dsl(const std::string& text);

// Canonical script for a config; parse_dsl(serialize_dsl(c)) == c.
std::string serialize_dsl(const SessionConfig& c);

// Render a polynomial with the session's variable names, matching the
// grammar accepted by parse_poly.
std::string poly_text(const Poly& p, const std::vector<std::string>& names);

// Materialize a declared set's point cache within the budget.
ConstructibleSet realize_set(const NamedSet& s,
                             long long budget = kDefaultPointBudget);

}  // namespace swk

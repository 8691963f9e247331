#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swk/concrete.hpp"
#include "swk/core.hpp"

namespace swk {

// Sparse multivariate polynomial over F_p: exponent vector -> coefficient
// in 1..p-1.  Coefficients are reduced on construction; the zero polynomial
// has no terms.
struct Poly {
    int prime = 2;
    int nvars = 0;
    std::map<std::vector<int>, int> terms;

    static Poly zero(int p, int n) { return Poly{p, n, {}}; }
    static Poly constant(int p, int n, long long c);
    static Poly variable(int p, int n, int index);  // x_{index+1}

    void add_term(std::vector<int> exps, long long coeff);
    bool is_zero() const { return terms.empty(); }
    int eval(const std::vector<int>& point) const;
    std::string to_string() const;  // "x1^2+2*x2" style, sorted terms

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly pow(int e) const;
    // substitute args[i] for variable i; args are polynomials in m vars
    Poly substitute(const std::vector<Poly>& args) const;

    bool operator==(const Poly& o) const = default;
};

// Parser for the DSL polynomial syntax: integer coefficients, named
// variables, `+ - * ^` with `^` binding tightest, parentheses; no implicit
// multiplication.  Throws StructuralError with position info.
Poly parse_poly(const std::string& text, int prime,
                const std::vector<std::string>& var_names);
Poly parse_poly(const std::string& text, int prime, int nvars);  // x1..xn

// Reindex into a larger variable space, sending variable i to i + shift.
Poly lift_poly(const Poly& f, int new_nvars, int shift);

// A system of equations (all = 0) and inequation clauses (each clause: at
// least one member != 0).  A single-polynomial clause is a plain
// inequation; clauses are what complements of closed subsets produce.
struct PolySystem {
    int prime = 2;
    int nvars = 0;
    std::vector<Poly> equations;
    std::vector<std::vector<Poly>> inequations;  // clauses

    bool satisfied(const std::vector<int>& point) const;
};

inline constexpr long long kDefaultPointBudget = 10'000'000;

// All solutions in F_p^n, lexicographically sorted.  Throws BudgetError
// (carrying the required budget) when p^n exceeds the budget.
std::vector<std::vector<int>> enumerate_points(
    const PolySystem& s, long long budget = kDefaultPointBudget);

// Constructible set with its verified point cache.
struct ConstructibleSet {
    PolySystem system;
    std::vector<std::vector<int>> points;

    static ConstructibleSet make(PolySystem s,
                                 long long budget = kDefaultPointBudget);
    static ConstructibleSet affine_space(int p, int n,
                                         long long budget = kDefaultPointBudget);
    int point_count() const { return (int)points.size(); }
    bool has_point(const std::vector<int>& pt) const;
};

enum class VarKind { Closed, Open, General };

// Morphism of constructible sets given by target coordinates as
// polynomials in source variables.  Closed (resp. open) immersions carry
// the added equations (resp. the added inequation clause) that cut out the
// image; the certificate is verified on construction.
struct VarMorphism {
    ConstructibleSet source, target;
    std::vector<Poly> coordinate_map;  // target.nvars entries
    VarKind kind = VarKind::General;
    std::vector<Poly> added;  // equations (Closed) or clause members (Open)

    std::vector<int> apply(const std::vector<int>& pt) const;
    void verify() const;  // throws StructuralError on any broken invariant
};

VarMorphism identity_var_morphism(const ConstructibleSet& x);

// Z = X + extra equations, with the closed immersion Z -> X.
std::pair<ConstructibleSet, VarMorphism> closed_subset(
    const ConstructibleSet& x, const std::vector<Poly>& extra_equations);

// Subtraction sequence Z >-> X <- X-Z of a closed immersion: the
// complement adds Z's extra equations as one inequation clause.
struct VarTriple {
    ConstructibleSet z, x, complement;
    VarMorphism closed_leg;  // Z -> X
    VarMorphism open_leg;    // X-Z -> X
};

VarTriple subtraction_sequence_of(const VarMorphism& closed_immersion);

// Fiber product of f: X -> W, g: Y -> W: variables concatenated, equations
// f_i(x) = g_i(y).  Projection kinds mirror the pulled-back leg when the
// other leg makes that certifiable.
struct FiberProduct {
    ConstructibleSet apex;
    VarMorphism to_left, to_right;  // apex -> X, apex -> Y
};

FiberProduct fiber_product(const VarMorphism& f, const VarMorphism& g,
                           long long budget = kDefaultPointBudget);

// Pullback of an identity-coordinates closed/open immersion i: Z -> X
// along any g: Y -> X, staying in Y's variables (substitute g into the
// added polynomials).  Returns the immersion g^*(i): g^{-1}Z -> Y.
std::pair<ConstructibleSet, VarMorphism> pullback_immersion(
    const VarMorphism& i, const VarMorphism& g);

// Pushout of X <- Z -> Y for identity-coordinates closed immersions in a
// shared ambient variable space: one marker coordinate t with t^2 = t,
// t = 0 on the X branch, t = 1 off Z on the Y branch.  Both legs are
// certified closed immersions; the square is cartesian on points.
struct ClosedPushout {
    ConstructibleSet apex;
    VarMorphism from_left, from_right;  // X -> apex, Y -> apex
};

ClosedPushout pushout_closed(const VarMorphism& i1, const VarMorphism& i2,
                             long long budget = kDefaultPointBudget);

// Cartesian product: variables concatenated, systems renamed and unioned.
ConstructibleSet product(const ConstructibleSet& x, const ConstructibleSet& y,
                         long long budget = kDefaultPointBudget);
// Projections and the pushout-product mediator are built from these.
VarMorphism product_morphism(const VarMorphism& f, const VarMorphism& g,
                             long long budget = kDefaultPointBudget);

// Pushout-product of closed immersions i: Z -> X, j: W -> Y: the certified
// closed immersion (X x W) u_{Z x W} (Z x Y) -> X x Y.
VarMorphism pushout_product_mediator(const VarMorphism& i,
                                     const VarMorphism& j,
                                     long long budget = kDefaultPointBudget);

// Bridge into a varieties_window instance over the same field: the object
// whose atoms are exactly this set's points.  kNoObj when out of window.
ObjId window_object(const ConstructibleSet& x, ConcreteSetInstance& window);

}  // namespace swk

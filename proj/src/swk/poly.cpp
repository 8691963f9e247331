#include "swk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace swk {

namespace {

int mod_reduce(long long c, int p) {
    long long r = c % p;
    if (r < 0) r += p;
    return (int)r;
}

int mod_pow(int base, int e, int p) {
    long long r = 1, b = mod_reduce(base, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return (int)r;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw StructuralError(msg);
}

}  // namespace

Poly Poly::constant(int p, int n, long long c) {
    Poly f = zero(p, n);
    f.add_term(std::vector<int>(n, 0), c);
    return f;
}

Poly Poly::variable(int p, int n, int index) {
    require(index >= 0 && index < n, "poly variable index out of range");
    Poly f = zero(p, n);
    std::vector<int> e(n, 0);
    e[index] = 1;
    f.add_term(std::move(e), 1);
    return f;
}

void Poly::add_term(std::vector<int> exps, long long coeff) {
    require((int)exps.size() == nvars, "poly term arity mismatch");
    int c = mod_reduce(coeff, prime);
    if (c == 0) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
        terms.emplace(std::move(exps), c);
    } else {
        it->second = mod_reduce(it->second + c, prime);
        if (it->second == 0) terms.erase(it);
    }
}

int Poly::eval(const std::vector<int>& point) const {
    require((int)point.size() == nvars, "poly eval arity mismatch");
    long long total = 0;
    for (const auto& [e, c] : terms) {
        long long t = c;
        for (int i = 0; i < nvars; ++i)
            if (e[i]) t = t * mod_pow(point[i], e[i], prime) % prime;
        total += t;
    }
    return mod_reduce(total, prime);
}

std::string Poly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << "+";
        first = false;
        bool any_var = false;
        for (int i = 0; i < nvars; ++i) any_var = any_var || e[i] > 0;
        if (c != 1 || !any_var) os << c;
        bool star = c != 1 || !any_var;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Poly Poly::operator+(const Poly& o) const {
    require(prime == o.prime && nvars == o.nvars, "poly arity mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    require(prime == o.prime && nvars == o.nvars, "poly arity mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    require(prime == o.prime && nvars == o.nvars, "poly arity mismatch");
    Poly out = zero(prime, nvars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            out.add_term(std::move(e), (long long)c1 * c2);
        }
    return out;
}

Poly Poly::pow(int e) const {
    require(e >= 0, "poly pow: negative exponent");
    Poly out = constant(prime, nvars, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& args) const {
    require((int)args.size() == nvars, "poly substitute arity mismatch");
    int m = args.empty() ? 0 : args[0].nvars;
    Poly out = zero(prime, m);
    for (const auto& [e, c] : terms) {
        Poly t = Poly::constant(prime, m, c);
        for (int i = 0; i < nvars; ++i)
            if (e[i]) t = t * args[i].pow(e[i]);
        out = out + t;
    }
    return out;
}

Poly lift_poly(const Poly& f, int new_nvars, int shift) {
    require(shift >= 0 && f.nvars + shift <= new_nvars,
            "lift_poly: bad target arity");
    Poly out = Poly::zero(f.prime, new_nvars);
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ne(new_nvars, 0);
        for (int i = 0; i < f.nvars; ++i) ne[i + shift] = e[i];
        out.add_term(std::move(ne), c);
    }
    return out;
}

// --- parser ----------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& text;
    int prime;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw StructuralError("polynomial syntax error at position " +
                              std::to_string(pos) + ": " + what + " in '" +
                              text + "'");
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }

    Poly atom() {
        skip_ws();
        int n = (int)vars.size();
        if (pos >= text.size()) fail("expected number, variable or '('");
        char c = text[pos];
        if (std::isdigit((unsigned char)c))
            return Poly::constant(prime, n, integer());
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum((unsigned char)text[pos]) ||
                    text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (int i = 0; i < n; ++i)
                if (vars[i] == name) return Poly::variable(prime, n, i);
            fail("unknown variable '" + name + "'");
        }
        fail("expected number, variable or '('");
    }

    Poly factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        Poly a = atom();
        while (eat('^')) {
            long long e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            a = a.pow((int)e);
        }
        if (neg) a = Poly::zero(prime, (int)vars.size()) - a;
        return a;
    }

    Poly term() {
        Poly a = factor();
        while (eat('*')) a = a * factor();
        return a;
    }

    Poly expr() {
        Poly a = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                a = a + term();
            } else if (c == '-') {
                ++pos;
                a = a - term();
            } else {
                break;
            }
        }
        return a;
    }

    Poly run() {
        Poly e = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return e;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int prime,
                const std::vector<std::string>& var_names) {
    PolyParser p{text, prime, var_names};
    return p.run();
}

Poly parse_poly(const std::string& text, int prime, int nvars) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return parse_poly(text, prime, names);
}

// --- systems and point sets --------------------------------------------------

bool PolySystem::satisfied(const std::vector<int>& point) const {
    for (const Poly& f : equations)
        if (f.eval(point) != 0) return false;
    for (const auto& clause : inequations) {
        bool ok = false;
        for (const Poly& f : clause)
            if (f.eval(point) != 0) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_points(const PolySystem& s,
                                               long long budget) {
    long long total = 1;
    for (int i = 0; i < s.nvars; ++i) {
        total *= s.prime;
        if (total > budget)
            throw BudgetError("point enumeration over F_" +
                                  std::to_string(s.prime) + "^" +
                                  std::to_string(s.nvars) +
                                  " exceeds the budget",
                              total);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> pt(s.nvars, 0);
    // lexicographic odometer
    while (true) {
        if (s.satisfied(pt)) out.push_back(pt);
        int i = s.nvars - 1;
        while (i >= 0 && pt[i] == s.prime - 1) pt[i--] = 0;
        if (i < 0) break;
        ++pt[i];
    }
    return out;
}

ConstructibleSet ConstructibleSet::make(PolySystem s, long long budget) {
    for (const Poly& f : s.equations)
        require(f.prime == s.prime && f.nvars == s.nvars,
                "constructible set: equation arity mismatch");
    for (const auto& cl : s.inequations)
        for (const Poly& f : cl)
            require(f.prime == s.prime && f.nvars == s.nvars,
                    "constructible set: inequation arity mismatch");
    ConstructibleSet x;
    x.points = enumerate_points(s, budget);
    x.system = std::move(s);
    return x;
}

ConstructibleSet ConstructibleSet::affine_space(int p, int n,
                                                long long budget) {
    PolySystem s;
    s.prime = p;
    s.nvars = n;
    return make(std::move(s), budget);
}

bool ConstructibleSet::has_point(const std::vector<int>& pt) const {
    return std::binary_search(points.begin(), points.end(), pt);
}

// --- morphisms ---------------------------------------------------------------

std::vector<int> VarMorphism::apply(const std::vector<int>& pt) const {
    std::vector<int> out;
    out.reserve(coordinate_map.size());
    for (const Poly& f : coordinate_map) out.push_back(f.eval(pt));
    return out;
}

void VarMorphism::verify() const {
    require((int)coordinate_map.size() == target.system.nvars,
            "morphism: coordinate map arity mismatch");
    for (const Poly& f : coordinate_map)
        require(f.prime == source.system.prime &&
                    f.nvars == source.system.nvars,
                "morphism: coordinate polynomial arity mismatch");
    std::vector<std::vector<int>> image;
    for (const auto& pt : source.points) {
        auto q = apply(pt);
        require(target.has_point(q),
                "morphism: image point outside the target");
        image.push_back(std::move(q));
    }
    if (kind == VarKind::General) return;
    std::sort(image.begin(), image.end());
    require(std::adjacent_find(image.begin(), image.end()) == image.end(),
            "immersion: not injective on points");
    for (const auto& pt : target.points) {
        bool in_image =
            std::binary_search(image.begin(), image.end(), pt);
        bool cut;
        if (kind == VarKind::Closed) {
            cut = true;
            for (const Poly& f : added) cut = cut && f.eval(pt) == 0;
        } else {
            cut = false;
            for (const Poly& f : added) cut = cut || f.eval(pt) != 0;
        }
        require(in_image == cut,
                "immersion: certificate does not cut out the image");
    }
}

VarMorphism identity_var_morphism(const ConstructibleSet& x) {
    VarMorphism m;
    m.source = x;
    m.target = x;
    for (int i = 0; i < x.system.nvars; ++i)
        m.coordinate_map.push_back(
            Poly::variable(x.system.prime, x.system.nvars, i));
    m.kind = VarKind::Closed;  // image is everything, cut by no equations
    m.verify();
    return m;
}

namespace {

std::vector<Poly> identity_coords(int p, int n) {
    std::vector<Poly> out;
    for (int i = 0; i < n; ++i) out.push_back(Poly::variable(p, n, i));
    return out;
}

bool has_identity_coords(const VarMorphism& m) {
    int n = m.source.system.nvars;
    if (m.target.system.nvars != n) return false;
    return m.coordinate_map == identity_coords(m.source.system.prime, n);
}

}  // namespace

std::pair<ConstructibleSet, VarMorphism> closed_subset(
    const ConstructibleSet& x, const std::vector<Poly>& extra_equations) {
    PolySystem s = x.system;
    for (const Poly& f : extra_equations) s.equations.push_back(f);
    ConstructibleSet z = ConstructibleSet::make(std::move(s));
    VarMorphism m;
    m.source = z;
    m.target = x;
    m.coordinate_map = identity_coords(x.system.prime, x.system.nvars);
    m.kind = VarKind::Closed;
    m.added = extra_equations;
    m.verify();
    return {std::move(z), std::move(m)};
}

VarTriple subtraction_sequence_of(const VarMorphism& closed_immersion) {
    require(closed_immersion.kind == VarKind::Closed,
            "subtraction sequence: the input must be a closed immersion");
    closed_immersion.verify();
    VarTriple t;
    t.z = closed_immersion.source;
    t.x = closed_immersion.target;
    PolySystem s = t.x.system;
    s.inequations.push_back(closed_immersion.added);
    t.complement = ConstructibleSet::make(std::move(s));
    t.closed_leg = closed_immersion;
    t.open_leg.source = t.complement;
    t.open_leg.target = t.x;
    t.open_leg.coordinate_map =
        identity_coords(t.x.system.prime, t.x.system.nvars);
    t.open_leg.kind = VarKind::Open;
    t.open_leg.added = closed_immersion.added;
    t.open_leg.verify();
    require((int)t.x.points.size() ==
                (int)t.z.points.size() + (int)t.complement.points.size(),
            "subtraction sequence: point counts do not add up");
    return t;
}

FiberProduct fiber_product(const VarMorphism& f, const VarMorphism& g,
                           long long budget) {
    require(f.source.system.prime == g.source.system.prime,
            "fiber product: different fields");
    require(f.target.points == g.target.points &&
                f.target.system.nvars == g.target.system.nvars,
            "fiber product: targets differ");
    int p = f.source.system.prime;
    int nx = f.source.system.nvars, ny = g.source.system.nvars;
    int n = nx + ny;
    PolySystem s;
    s.prime = p;
    s.nvars = n;
    for (const Poly& e : f.source.system.equations)
        s.equations.push_back(lift_poly(e, n, 0));
    for (const Poly& e : g.source.system.equations)
        s.equations.push_back(lift_poly(e, n, nx));
    for (size_t i = 0; i < f.coordinate_map.size(); ++i)
        s.equations.push_back(lift_poly(f.coordinate_map[i], n, 0) -
                              lift_poly(g.coordinate_map[i], n, nx));
    for (const auto& cl : f.source.system.inequations) {
        std::vector<Poly> lifted;
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, 0));
        s.inequations.push_back(std::move(lifted));
    }
    for (const auto& cl : g.source.system.inequations) {
        std::vector<Poly> lifted;
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, nx));
        s.inequations.push_back(std::move(lifted));
    }
    FiberProduct out;
    out.apex = ConstructibleSet::make(std::move(s), budget);

    auto projection = [&](bool left) {
        VarMorphism m;
        m.source = out.apex;
        m.target = left ? f.source : g.source;
        int tn = m.target.system.nvars;
        for (int i = 0; i < tn; ++i)
            m.coordinate_map.push_back(
                Poly::variable(p, n, left ? i : nx + i));
        // the projection opposite an immersion inherits its kind, with the
        // cut polynomials pulled back along the other leg
        const VarMorphism& opposite = left ? g : f;
        const VarMorphism& along = left ? f : g;
        if (opposite.kind != VarKind::General) {
            m.kind = opposite.kind;
            for (const Poly& a : opposite.added)
                m.added.push_back(a.substitute(along.coordinate_map));
        }
        m.verify();
        return m;
    };
    out.to_left = projection(true);
    out.to_right = projection(false);
    return out;
}

std::pair<ConstructibleSet, VarMorphism> pullback_immersion(
    const VarMorphism& i, const VarMorphism& g) {
    require(i.kind != VarKind::General,
            "pullback_immersion: the first leg must be an immersion");
    require(has_identity_coords(i),
            "pullback_immersion: the immersion must have identity "
            "coordinates");
    require(g.target.points == i.target.points,
            "pullback_immersion: targets differ");
    std::vector<Poly> pulled;
    for (const Poly& a : i.added)
        pulled.push_back(a.substitute(g.coordinate_map));
    if (i.kind == VarKind::Closed) return closed_subset(g.source, pulled);
    PolySystem s = g.source.system;
    s.inequations.push_back(pulled);
    ConstructibleSet u = ConstructibleSet::make(std::move(s));
    VarMorphism m;
    m.source = u;
    m.target = g.source;
    m.coordinate_map =
        identity_coords(g.source.system.prime, g.source.system.nvars);
    m.kind = VarKind::Open;
    m.added = pulled;
    m.verify();
    return {std::move(u), std::move(m)};
}

ClosedPushout pushout_closed(const VarMorphism& i1, const VarMorphism& i2,
                             long long budget) {
    require(i1.kind == VarKind::Closed && i2.kind == VarKind::Closed,
            "pushout: both legs must be closed immersions");
    require(has_identity_coords(i1) && has_identity_coords(i2),
            "pushout: legs must have identity coordinates");
    require(i1.source.points == i2.source.points &&
                i1.source.system.nvars == i2.source.system.nvars,
            "pushout: legs have different sources");
    const ConstructibleSet& x = i1.target;
    const ConstructibleSet& y = i2.target;
    int p = x.system.prime;
    int nv = x.system.nvars;
    require(y.system.nvars == nv && y.system.prime == p,
            "pushout: targets live in different variable spaces");
    int n = nv + 1;  // marker coordinate t is the last variable
    Poly t = Poly::variable(p, n, nv);
    Poly one = Poly::constant(p, n, 1);

    PolySystem s;
    s.prime = p;
    s.nvars = n;
    s.equations.push_back(t * t - t);
    for (const Poly& e : x.system.equations)
        s.equations.push_back((one - t) * lift_poly(e, n, 0));
    for (const Poly& e : y.system.equations)
        s.equations.push_back(t * lift_poly(e, n, 0));
    for (const auto& cl : x.system.inequations) {
        std::vector<Poly> lifted{t};
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, 0));
        s.inequations.push_back(std::move(lifted));
    }
    for (const auto& cl : y.system.inequations) {
        std::vector<Poly> lifted{one - t};
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, 0));
        s.inequations.push_back(std::move(lifted));
    }
    // on the t = 1 branch the point must avoid Z
    {
        std::vector<Poly> cl{one - t};
        for (const Poly& e : i2.added) cl.push_back(lift_poly(e, n, 0));
        s.inequations.push_back(std::move(cl));
    }
    ClosedPushout out;
    out.apex = ConstructibleSet::make(std::move(s), budget);

    out.from_left.source = x;
    out.from_left.target = out.apex;
    out.from_left.coordinate_map = identity_coords(p, nv);
    for (Poly& f : out.from_left.coordinate_map) f = lift_poly(f, nv, 0);
    out.from_left.coordinate_map.push_back(Poly::zero(p, nv));
    out.from_left.kind = VarKind::Closed;
    out.from_left.added = {t};
    out.from_left.verify();

    // t(y) = 1 - prod (1 - e^{p-1}) vanishes exactly on Z
    Poly indicator = Poly::constant(p, nv, 1);
    for (const Poly& e : i2.added)
        indicator = indicator *
                    (Poly::constant(p, nv, 1) - e.pow(p - 1));
    out.from_right.source = y;
    out.from_right.target = out.apex;
    out.from_right.coordinate_map = identity_coords(p, nv);
    out.from_right.coordinate_map.push_back(
        Poly::constant(p, nv, 1) - indicator);
    out.from_right.kind = VarKind::Closed;
    for (const Poly& e : i1.added)
        out.from_right.added.push_back((one - t) * lift_poly(e, n, 0));
    out.from_right.verify();

    require((int)out.apex.points.size() ==
                (int)x.points.size() + (int)y.points.size() -
                    (int)i1.source.points.size(),
            "pushout: point counts do not glue");
    return out;
}

ConstructibleSet product(const ConstructibleSet& x, const ConstructibleSet& y,
                         long long budget) {
    require(x.system.prime == y.system.prime, "product: different fields");
    int p = x.system.prime;
    int nx = x.system.nvars, ny = y.system.nvars, n = nx + ny;
    PolySystem s;
    s.prime = p;
    s.nvars = n;
    for (const Poly& e : x.system.equations)
        s.equations.push_back(lift_poly(e, n, 0));
    for (const Poly& e : y.system.equations)
        s.equations.push_back(lift_poly(e, n, nx));
    for (const auto& cl : x.system.inequations) {
        std::vector<Poly> lifted;
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, 0));
        s.inequations.push_back(std::move(lifted));
    }
    for (const auto& cl : y.system.inequations) {
        std::vector<Poly> lifted;
        for (const Poly& e : cl) lifted.push_back(lift_poly(e, n, nx));
        s.inequations.push_back(std::move(lifted));
    }
    return ConstructibleSet::make(std::move(s), budget);
}

VarMorphism product_morphism(const VarMorphism& f, const VarMorphism& g,
                             long long budget) {
    VarMorphism m;
    m.source = product(f.source, g.source, budget);
    m.target = product(f.target, g.target, budget);
    int n = m.source.system.nvars;
    int nx = f.source.system.nvars;
    for (const Poly& c : f.coordinate_map)
        m.coordinate_map.push_back(lift_poly(c, n, 0));
    for (const Poly& c : g.coordinate_map)
        m.coordinate_map.push_back(lift_poly(c, n, nx));
    if (f.kind == VarKind::Closed && g.kind == VarKind::Closed) {
        m.kind = VarKind::Closed;
        int tn = m.target.system.nvars;
        int tnx = f.target.system.nvars;
        for (const Poly& a : f.added)
            m.added.push_back(lift_poly(a, tn, 0));
        for (const Poly& a : g.added)
            m.added.push_back(lift_poly(a, tn, tnx));
    }
    m.verify();
    return m;
}

VarMorphism pushout_product_mediator(const VarMorphism& i,
                                     const VarMorphism& j, long long budget) {
    require(i.kind == VarKind::Closed && j.kind == VarKind::Closed &&
                has_identity_coords(i) && has_identity_coords(j),
            "pushout-product: both legs must be identity-coordinate closed "
            "immersions");
    // Z x W >-> X x W  and  Z x W >-> Z x Y, glued, mapped into X x Y
    VarMorphism left = product_morphism(i, identity_var_morphism(j.source),
                                        budget);   // ZxW -> XxW
    VarMorphism right = product_morphism(identity_var_morphism(i.source), j,
                                         budget);  // ZxW -> ZxY
    ClosedPushout po = pushout_closed(left, right, budget);
    ConstructibleSet xy = product(i.target, j.target, budget);
    int p = xy.system.prime;
    int n = xy.system.nvars;  // apex has n + 1 variables (marker last)
    int tnx = i.target.system.nvars;
    VarMorphism m;
    m.source = po.apex;
    m.target = xy;
    for (int k = 0; k < n; ++k)
        m.coordinate_map.push_back(Poly::variable(p, n + 1, k));
    m.kind = VarKind::Closed;
    // image = (X x W) u (Z x Y), cut out by all pairwise products
    for (const Poly& a : i.added)
        for (const Poly& b : j.added)
            m.added.push_back(lift_poly(a, n, 0) * lift_poly(b, n, tnx));
    m.verify();
    return m;
}

ObjId window_object(const ConstructibleSet& x, ConcreteSetInstance& window) {
    int p = x.system.prime, n = x.system.nvars;
    long long expected = 1;
    for (int i = 0; i < n; ++i) expected *= p;
    require(window.universe_size() == expected,
            "window bridge: instance universe does not match F_" +
                std::to_string(p) + "^" + std::to_string(n));
    Mask m = 0;
    for (const auto& pt : x.points) {
        long long rank = 0;
        for (int i = 0; i < n; ++i) rank = rank * p + pt[i];
        m |= Mask(1) << rank;
    }
    return window.obj_of_mask(m);
}

}  // namespace swk

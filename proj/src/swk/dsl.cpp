#include "swk/dsl.hpp"

#include <cctype>
#include <sstream>

namespace swk {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string format_dsl_error(int line, int column, const std::string& detail,
                             const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << "dsl error at line " << line << ", column " << column << ": "
       << detail;
    if (!expected.empty()) {
        std::vector<std::string> quoted;
        quoted.reserve(expected.size());
        for (const auto& e : expected) quoted.push_back("'" + e + "'");
        os << " (expected " << join(quoted, ", ") << ")";
    }
    return os.str();
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

enum class TokKind { Ident, Number, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    // Raw text up to (not including) the next `;`, with the position of
    // its first character.  Used for polynomial bodies, whose grammar is
    // delegated to parse_poly.
    std::pair<std::string, Token> raw_until_semicolon() {
        // Rewind to the character position of the pending token.
        size_t start = tok_begin_;
        size_t end = start;
        while (end < text_.size() && text_[end] != ';' && text_[end] != ',' &&
               text_[end] != '}' && text_[end] != '#')
            ++end;
        Token at = tok_;
        pos_ = end;
        line_ = tok_.line;
        col_ = tok_.column;
        for (size_t i = start; i < end; ++i) bump(text_[i]);
        advance();
        return {text_.substr(start, end - start), at};
    }

private:
    void bump(char c) {
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
    }

    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    bump(text_[pos_]);
                    ++pos_;
                }
            } else if (std::isspace((unsigned char)c)) {
                bump(c);
                ++pos_;
            } else {
                break;
            }
        }
        tok_begin_ = pos_;
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = TokKind::End;
            tok_.text = "<end of input>";
            return;
        }
        char c = text_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t s = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) ||
                    text_[pos_] == '_')) {
                bump(text_[pos_]);
                ++pos_;
            }
            tok_ = {TokKind::Ident, text_.substr(s, pos_ - s), tok_.line,
                    tok_.column};
        } else if (std::isdigit((unsigned char)c)) {
            size_t s = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit((unsigned char)text_[pos_])) {
                bump(text_[pos_]);
                ++pos_;
            }
            tok_ = {TokKind::Number, text_.substr(s, pos_ - s), tok_.line,
                    tok_.column};
        } else {
            bump(c);
            ++pos_;
            tok_ = {TokKind::Punct, std::string(1, c), tok_.line, tok_.column};
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    size_t tok_begin_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& at, const std::string& detail,
                       std::vector<std::string> expected = {}) {
    throw DslError(at.line, at.column, detail, std::move(expected));
}

Token expect_punct(Lexer& lex, const std::string& p) {
    Token t = lex.next();
    if (t.kind != TokKind::Punct || t.text != p)
        fail(t, "found '" + t.text + "'", {p});
    return t;
}

int expect_number(Lexer& lex, const std::string& what) {
    Token t = lex.next();
    if (t.kind != TokKind::Number)
        fail(t, "found '" + t.text + "'", {what});
    return std::stoi(t.text);
}

Token expect_ident(Lexer& lex, const std::string& what) {
    Token t = lex.next();
    if (t.kind != TokKind::Ident)
        fail(t, "found '" + t.text + "'", {what});
    return t;
}

Poly parse_body(Lexer& lex, const SessionConfig& cfg) {
    auto [body, at] = lex.raw_until_semicolon();
    try {
        return parse_poly(body, cfg.field, cfg.vars);
    } catch (const StructuralError& e) {
        fail(at, e.message);
    }
}

void parse_set(Lexer& lex, SessionConfig& cfg, const Token& kw) {
    if (cfg.field == 0)
        fail(kw, "set declared before a field statement");
    if (cfg.vars.empty())
        fail(kw, "set declared before a var statement");
    NamedSet s;
    s.name = expect_ident(lex, "set name").text;
    s.system.prime = cfg.field;
    s.system.nvars = (int)cfg.vars.size();
    expect_punct(lex, "{");
    for (;;) {
        Token t = lex.next();
        if (t.kind == TokKind::Punct && t.text == "}") break;
        if (t.kind != TokKind::Ident || (t.text != "eq" && t.text != "neq"))
            fail(t, "found '" + t.text + "'", {"eq", "neq", "}"});
        expect_punct(lex, ":");
        if (t.text == "eq") {
            s.system.equations.push_back(parse_body(lex, cfg));
        } else {
            std::vector<Poly> clause;
            clause.push_back(parse_body(lex, cfg));
            while (lex.peek().kind == TokKind::Punct &&
                   lex.peek().text == ",") {
                lex.next();
                clause.push_back(parse_body(lex, cfg));
            }
            s.system.inequations.push_back(std::move(clause));
        }
        expect_punct(lex, ";");
    }
    for (const auto& other : cfg.sets)
        if (other.name == s.name)
            fail(kw, "set '" + s.name + "' declared twice");
    cfg.sets.push_back(std::move(s));
}

void parse_group(Lexer& lex, SessionConfig& cfg, const Token& kw) {
    if (cfg.group) fail(kw, "group declared twice");
    if (cfg.field != 0) fail(kw, "group cannot be combined with a field");
    expect_punct(lex, "{");
    Token t = expect_ident(lex, "table");
    if (t.text != "table") fail(t, "found '" + t.text + "'", {"table"});
    expect_punct(lex, ":");
    GroupTable g;
    g.mult.clear();
    std::vector<int> row;
    for (;;) {
        row.push_back(expect_number(lex, "group element"));
        Token sep = lex.next();
        if (sep.kind == TokKind::Punct && sep.text == ",") continue;
        if (sep.kind == TokKind::Punct && sep.text == ";") {
            g.mult.push_back(row);
            row.clear();
            if (lex.peek().kind == TokKind::Punct && lex.peek().text == "}") {
                lex.next();
                break;
            }
            continue;
        }
        if (sep.kind == TokKind::Punct && sep.text == "}") {
            g.mult.push_back(row);
            break;
        }
        fail(sep, "found '" + sep.text + "'", {",", ";", "}"});
    }
    g.order = (int)g.mult.size();
    try {
        g.validate();
    } catch (const StructuralError& e) {
        fail(kw, e.message);
    }
    cfg.group = std::move(g);
}

}  // namespace

DslError::DslError(int line_, int column_, std::string detail,
                   std::vector<std::string> expected_)
    : StructuralError(format_dsl_error(line_, column_, detail, expected_)),
      line(line_),
      column(column_),
      expected(std::move(expected_)) {}

bool SessionConfig::operator==(const SessionConfig& o) const {
    bool groups_equal =
        group.has_value() == o.group.has_value() &&
        (!group || (group->order == o.group->order &&
                    group->mult == o.group->mult));
    return kind == o.kind && universe == o.universe && field == o.field &&
           vars == o.vars && groups_equal && sets == o.sets;
}

SessionConfig parse_dsl(const std::string& text) {
    SessionConfig cfg;
    Lexer lex(text);
    while (lex.peek().kind != TokKind::End) {
        Token kw = lex.next();
        if (kw.kind != TokKind::Ident)
            fail(kw, "found '" + kw.text + "'",
                 {"field", "var", "set", "group", "universe"});
        if (kw.text == "field") {
            if (cfg.field != 0) fail(kw, "field declared twice");
            if (cfg.group) fail(kw, "field cannot be combined with a group");
            Token num = lex.peek();
            int p = expect_number(lex, "prime");
            if (!is_prime(p))
                fail(num, std::to_string(p) + " is not prime");
            cfg.field = p;
            expect_punct(lex, ";");
        } else if (kw.text == "var") {
            if (cfg.field == 0)
                fail(kw, "var declared before a field statement");
            if (!cfg.vars.empty()) fail(kw, "var declared twice");
            cfg.vars.push_back(expect_ident(lex, "variable name").text);
            while (lex.peek().kind == TokKind::Punct &&
                   lex.peek().text == ",") {
                lex.next();
                Token name = expect_ident(lex, "variable name");
                for (const auto& v : cfg.vars)
                    if (v == name.text)
                        fail(name, "variable '" + name.text +
                                       "' declared twice");
                cfg.vars.push_back(name.text);
            }
            expect_punct(lex, ";");
        } else if (kw.text == "universe") {
            Token num = lex.peek();
            int n = expect_number(lex, "universe size");
            if (n < 1 || n > 64)
                fail(num, "universe size must be between 1 and 64");
            cfg.universe = n;
            expect_punct(lex, ";");
        } else if (kw.text == "set") {
            parse_set(lex, cfg, kw);
        } else if (kw.text == "group") {
            parse_group(lex, cfg, kw);
        } else {
            fail(kw, "found '" + kw.text + "'",
                 {"field", "var", "set", "group", "universe"});
        }
    }
    if (cfg.group)
        cfg.kind = InstanceKind::GSet;
    else if (cfg.field != 0)
        cfg.kind = InstanceKind::Varieties;
    else
        cfg.kind = InstanceKind::FinSet;
    if (cfg.kind == InstanceKind::Varieties && cfg.vars.empty())
        throw DslError(1, 1, "field declared without variables");
    return cfg;
}

std::string poly_text(const Poly& p, const std::vector<std::string>& names) {
    if ((int)names.size() != p.nvars)
        throw StructuralError("poly_text: expected " +
                              std::to_string(p.nvars) + " names, got " +
                              std::to_string(names.size()));
    if (p.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& [exps, coeff] : p.terms) {
        std::vector<std::string> factors;
        bool has_var = false;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            has_var = true;
            factors.push_back(exps[i] == 1
                                  ? names[i]
                                  : names[i] + "^" +
                                        std::to_string(exps[i]));
        }
        if (coeff != 1 || !has_var)
            factors.insert(factors.begin(), std::to_string(coeff));
        terms.push_back(join(factors, "*"));
    }
    return join(terms, "+");
}

std::string serialize_dsl(const SessionConfig& c) {
    std::ostringstream os;
    if (c.kind == InstanceKind::Varieties) {
        os << "field " << c.field << ";\n";
        os << "var " << join(c.vars, ", ") << ";\n";
        for (const auto& s : c.sets) {
            os << "set " << s.name << " {\n";
            for (const auto& e : s.system.equations)
                os << "  eq: " << poly_text(e, c.vars) << ";\n";
            for (const auto& clause : s.system.inequations) {
                std::vector<std::string> parts;
                for (const auto& m : clause)
                    parts.push_back(poly_text(m, c.vars));
                os << "  neq: " << join(parts, ", ") << ";\n";
            }
            os << "}\n";
        }
    } else if (c.kind == InstanceKind::GSet) {
        os << "group {\n  table: ";
        for (int g = 0; g < c.group->order; ++g) {
            if (g) os << "; ";
            for (int h = 0; h < c.group->order; ++h) {
                if (h) os << ", ";
                os << c.group->mult[g][h];
            }
        }
        os << ";\n}\n";
        os << "universe " << c.universe << ";\n";
    } else {
        os << "universe " << c.universe << ";\n";
    }
    return os.str();
}

ConstructibleSet realize_set(const NamedSet& s, long long budget) {
    return ConstructibleSet::make(s.system, budget);
}

}  // namespace swk

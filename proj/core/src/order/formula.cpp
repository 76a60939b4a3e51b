#include "swb/order/formula.hpp"

#include <cctype>

#include "swb/errors.hpp"

namespace swb::order {

namespace {

struct Token {
    enum class Kind { ident, constant, lparen, rparen, comma, amp, pipe, bang,
                      end };
    Kind kind;
    std::size_t pos;
    std::string text;
    ElementId value{0};
};

struct Lexer {
    const std::string& text;
    std::size_t pos{0};

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw format_error("formula: position " + std::to_string(at) + ": " +
                           msg);
    }

    Token next() {
        while (pos < text.size() && std::isspace(
                   static_cast<unsigned char>(text[pos])))
            ++pos;
        std::size_t at = pos;
        if (pos == text.size())
            return {Token::Kind::end, at, ""};
        char c = text[pos];
        switch (c) {
        case '(': ++pos; return {Token::Kind::lparen, at, "("};
        case ')': ++pos; return {Token::Kind::rparen, at, ")"};
        case ',': ++pos; return {Token::Kind::comma, at, ","};
        case '&': ++pos; return {Token::Kind::amp, at, "&"};
        case '|': ++pos; return {Token::Kind::pipe, at, "|"};
        case '!': ++pos; return {Token::Kind::bang, at, "!"};
        case '@': {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start)
                fail(at, "expected an element id after '@'");
            Token t{Token::Kind::constant, at, text.substr(start, pos - start)};
            t.value = static_cast<ElementId>(std::stol(t.text));
            return t;
        }
        default:
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                        text[pos] == '_'))
                    ++pos;
                return {Token::Kind::ident, at,
                        text.substr(start, pos - start)};
            }
            fail(at, std::string("unexpected character '") + c + "'");
        }
    }
};

struct Parser {
    Lexer lex;
    Token tok;

    explicit Parser(const std::string& text) : lex{text, 0} { advance(); }

    void advance() { tok = lex.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        lex.fail(tok.pos, msg);
    }

    void expect(Token::Kind kind, const char* what) {
        if (tok.kind != kind)
            fail(std::string("expected ") + what);
        advance();
    }

    Term term() {
        if (tok.kind == Token::Kind::constant) {
            Term t{true, "", tok.value};
            advance();
            return t;
        }
        if (tok.kind == Token::Kind::ident) {
            Term t{false, tok.text, 0};
            advance();
            return t;
        }
        fail("expected a variable or @<id> constant");
    }

    FormulaPtr atom(Formula::Kind kind, std::size_t arity,
                    const std::string& name) {
        std::size_t at = tok.pos;
        expect(Token::Kind::lparen, "'('");
        auto f = std::make_shared<Formula>();
        f->kind = kind;
        if (tok.kind != Token::Kind::rparen) {
            f->args.push_back(term());
            while (tok.kind == Token::Kind::comma) {
                advance();
                f->args.push_back(term());
            }
        }
        expect(Token::Kind::rparen, "')'");
        if (f->args.size() != arity)
            lex.fail(at, name + " takes " + std::to_string(arity) +
                             " arguments, got " +
                             std::to_string(f->args.size()));
        return f;
    }

    FormulaPtr primary() {
        if (tok.kind == Token::Kind::bang) {
            advance();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::neg;
            f->kids.push_back(primary());
            return f;
        }
        if (tok.kind == Token::Kind::lparen) {
            advance();
            FormulaPtr inner = disjunction();
            expect(Token::Kind::rparen, "')'");
            return inner;
        }
        if (tok.kind == Token::Kind::ident) {
            std::string name = tok.text;
            advance();
            if (name == "lt")
                return atom(Formula::Kind::atom_lt, 4, name);
            if (name == "up")
                return atom(Formula::Kind::atom_up, 3, name);
            if (name == "down")
                return atom(Formula::Kind::atom_down, 3, name);
            if (name == "eq")
                return atom(Formula::Kind::atom_eq, 2, name);
            fail("unknown atom '" + name + "'");
        }
        fail("expected an atom, '!' or '('");
    }

    FormulaPtr conjunction() {
        FormulaPtr left = primary();
        while (tok.kind == Token::Kind::amp) {
            advance();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::conj;
            f->kids = {left, primary()};
            left = f;
        }
        return left;
    }

    FormulaPtr disjunction() {
        FormulaPtr left = conjunction();
        while (tok.kind == Token::Kind::pipe) {
            advance();
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::disj;
            f->kids = {left, conjunction()};
            left = f;
        }
        return left;
    }
};

int precedence(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::disj: return 1;
    case Formula::Kind::conj: return 2;
    case Formula::Kind::neg: return 3;
    default: return 4;
    }
}

void print_into(const FormulaPtr& f, int parent, std::string& out) {
    int prec = precedence(f->kind);
    bool parens = prec < parent;
    if (parens)
        out += "(";
    switch (f->kind) {
    case Formula::Kind::atom_lt:
    case Formula::Kind::atom_up:
    case Formula::Kind::atom_down:
    case Formula::Kind::atom_eq: {
        const char* name = f->kind == Formula::Kind::atom_lt   ? "lt"
                           : f->kind == Formula::Kind::atom_up ? "up"
                           : f->kind == Formula::Kind::atom_down ? "down"
                                                                 : "eq";
        out += name;
        out += "(";
        for (std::size_t i = 0; i < f->args.size(); ++i) {
            if (i)
                out += ",";
            const Term& t = f->args[i];
            out += t.is_const ? "@" + std::to_string(t.value) : t.var;
        }
        out += ")";
        break;
    }
    case Formula::Kind::neg:
        out += "!";
        print_into(f->kids[0], precedence(Formula::Kind::neg), out);
        break;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
        print_into(f->kids[0], prec, out);
        out += f->kind == Formula::Kind::conj ? " & " : " | ";
        print_into(f->kids[1], prec + 1, out);
        break;
    }
    if (parens)
        out += ")";
}

} // namespace

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind != b->kind || a->args != b->args ||
        a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i]))
            return false;
    return true;
}

FormulaPtr parse_formula(const std::string& text) {
    Parser parser(text);
    FormulaPtr f = parser.disjunction();
    if (parser.tok.kind != Token::Kind::end)
        parser.fail("trailing input after the formula");
    return f;
}

std::string print_formula(const FormulaPtr& f) {
    std::string out;
    print_into(f, 0, out);
    return out;
}

namespace {

template <typename F> void walk(const FormulaPtr& f, F&& visit) {
    visit(*f);
    for (const FormulaPtr& kid : f->kids)
        walk(kid, visit);
}

} // namespace

std::set<std::string> formula_variables(const FormulaPtr& f) {
    std::set<std::string> vars;
    walk(f, [&](const Formula& node) {
        for (const Term& t : node.args)
            if (!t.is_const)
                vars.insert(t.var);
    });
    return vars;
}

std::set<ElementId> formula_constants(const FormulaPtr& f) {
    std::set<ElementId> consts;
    walk(f, [&](const Formula& node) {
        for (const Term& t : node.args)
            if (t.is_const)
                consts.insert(t.value);
    });
    return consts;
}

} // namespace swb::order

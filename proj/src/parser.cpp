#include "valcurve/parser.hpp"

#include <cctype>
#include <memory>

#include "valcurve/errors.hpp"

namespace valcurve {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBracket, RBracket, Colon, End };

struct Token {
    Tok kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) {
        std::size_t i = 0;
        while (i < src.size()) {
            char c = src[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                toks_.push_back({Tok::Int, src.substr(i, j - i)});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
                toks_.push_back({Tok::Ident, src.substr(i, j - i)});
                i = j;
                continue;
            }
            Tok k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '/': k = Tok::Slash; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '[': k = Tok::LBracket; break;
                case ']': k = Tok::RBracket; break;
                case ':': k = Tok::Colon; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'");
            }
            toks_.push_back({k, std::string(1, c)});
            ++i;
        }
        toks_.push_back({Tok::End, ""});
    }

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (toks_[pos_].kind != k) return false;
        ++pos_;
        return true;
    }
    Token expect(Tok k, const char* what) {
        if (toks_[pos_].kind != k)
            throw ParseError(std::string("expected ") + what + " near '" + toks_[pos_].text + "'");
        return toks_[pos_++];
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

struct Node {
    enum Kind { Num, Var, Add, Sub, Mul, Neg, Pow, Tail } kind;
    Rational value;                  // Num payload, or Pow exponent
    std::string name;                // Var payload
    std::unique_ptr<Node> a, b;      // operands; Tail keeps its bound in value
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

Integer to_integer(const std::string& digits) { return Integer(digits); }

class Parser {
public:
    explicit Parser(Lexer& lx) : lx_(lx) {}

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (lx_.accept(Tok::Plus)) {
                auto s = make(Node::Add);
                s->a = std::move(n);
                s->b = term();
                n = std::move(s);
            } else if (lx_.accept(Tok::Minus)) {
                auto s = make(Node::Sub);
                s->a = std::move(n);
                s->b = term();
                n = std::move(s);
            } else {
                return n;
            }
        }
    }

private:
    NodePtr term() {
        NodePtr n = factor();
        while (lx_.accept(Tok::Star)) {
            auto s = make(Node::Mul);
            s->a = std::move(n);
            s->b = factor();
            n = std::move(s);
        }
        return n;
    }

    NodePtr factor() {
        if (lx_.accept(Tok::Minus)) {
            auto s = make(Node::Neg);
            s->a = factor();
            return s;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (!lx_.accept(Tok::Caret)) return base;
        auto p = make(Node::Pow);
        p->value = exponent();
        p->a = std::move(base);
        return p;
    }

    // integer, -integer, or parenthesized signed rational
    Rational exponent() {
        if (lx_.accept(Tok::LParen)) {
            bool neg = lx_.accept(Tok::Minus);
            Rational r = rational_tail();
            lx_.expect(Tok::RParen, "')'");
            return neg ? Rational(-r) : r;
        }
        bool neg = lx_.accept(Tok::Minus);
        Token t = lx_.expect(Tok::Int, "an exponent");
        Rational r(to_integer(t.text));
        return neg ? Rational(-r) : r;
    }

    // digits already pending: int ('/' int)?
    Rational rational_tail() {
        Token num = lx_.expect(Tok::Int, "a number");
        Integer n = to_integer(num.text);
        if (!lx_.accept(Tok::Slash)) return Rational(n);
        Token den = lx_.expect(Tok::Int, "a denominator");
        Integer d = to_integer(den.text);
        if (sgn(d) == 0) throw ParseError("zero denominator");
        Rational r(n);
        r /= Rational(d);
        return r;
    }

    NodePtr atom() {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Int) {
            auto n = make(Node::Num);
            n->value = rational_tail();
            return n;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "O") {
                lx_.next();
                lx_.expect(Tok::LParen, "'('");
                auto n = make(Node::Tail);
                n->a = expr();
                lx_.expect(Tok::RParen, "')'");
                return n;
            }
            if (t.text == "x" || t.text == "y" || t.text == "z" || t.text == "t" ||
                t.text == "eps") {
                auto n = make(Node::Var);
                n->name = lx_.next().text;
                return n;
            }
            throw ParseError("unknown name '" + t.text + "'");
        }
        if (lx_.accept(Tok::LParen)) {
            NodePtr n = expr();
            lx_.expect(Tok::RParen, "')'");
            return n;
        }
        throw ParseError("expected a value near '" + t.text + "'");
    }

    Lexer& lx_;
};

NodePtr parse_tree(const std::string& text) {
    Lexer lx(text);
    Parser p(lx);
    NodePtr n = p.expr();
    if (lx.peek().kind != Tok::End)
        throw ParseError("trailing input near '" + lx.peek().text + "'");
    return n;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long small_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw ParseError("exponent out of range");
    return r.get_num().get_si();
}

PuiseuxSeries eval_series(const Node* n, const FieldPtr& field) {
    switch (n->kind) {
        case Node::Num:
            return PuiseuxSeries::constant(FieldElement(n->value));
        case Node::Var:
            if (n->name == "eps") return PuiseuxSeries::epsilon();
            if (n->name == "t") {
                if (!field) throw ParseError("'t' needs a field extension");
                return PuiseuxSeries::constant(FieldElement::generator(field));
            }
            throw ParseError("'" + n->name + "' is not allowed in a series");
        case Node::Add:
            return eval_series(n->a.get(), field) + eval_series(n->b.get(), field);
        case Node::Sub:
            return eval_series(n->a.get(), field) - eval_series(n->b.get(), field);
        case Node::Mul:
            return eval_series(n->a.get(), field) * eval_series(n->b.get(), field);
        case Node::Neg:
            return -eval_series(n->a.get(), field);
        case Node::Pow: {
            const Node* base = n->a.get();
            if (base->kind == Node::Var && base->name == "eps")
                return PuiseuxSeries::monomial(FieldElement(1), n->value);
            if (!is_integer(n->value))
                throw ParseError("fractional exponents are only allowed on eps");
            long e = small_long(n->value);
            if (e < 0) throw ParseError("negative exponents are only allowed on eps");
            return eval_series(base, field).pow(e);
        }
        case Node::Tail: {
            PuiseuxSeries inner = eval_series(n->a.get(), field);
            if (inner.terms().size() != 1 || !(inner.terms()[0].coeff == FieldElement(1)))
                throw ParseError("the truncation marker takes a single eps power");
            return PuiseuxSeries().truncated(inner.terms()[0].exp);
        }
    }
    throw ParseError("malformed expression");
}

QPoly eval_qpoly(const Node* n) {
    switch (n->kind) {
        case Node::Num:
            return QPoly(n->value);
        case Node::Var:
            if (n->name == "t") return QPoly::variable();
            throw ParseError("only 't' may appear in a minimal polynomial");
        case Node::Add:
            return eval_qpoly(n->a.get()) + eval_qpoly(n->b.get());
        case Node::Sub:
            return eval_qpoly(n->a.get()) - eval_qpoly(n->b.get());
        case Node::Mul:
            return eval_qpoly(n->a.get()) * eval_qpoly(n->b.get());
        case Node::Neg:
            return -eval_qpoly(n->a.get());
        case Node::Pow: {
            if (!is_integer(n->value))
                throw ParseError("fractional exponents are only allowed on eps");
            long e = small_long(n->value);
            if (e < 0) throw ParseError("negative exponents are only allowed on eps");
            QPoly base = eval_qpoly(n->a.get());
            QPoly r(Rational(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        case Node::Tail:
            throw ParseError("a truncation marker is not allowed here");
    }
    throw ParseError("malformed expression");
}

MultiPoly eval_trivariate(const Node* n, const FieldPtr& field) {
    switch (n->kind) {
        case Node::Num:
            return MultiPoly::constant(3, FieldElement(n->value));
        case Node::Var: {
            if (n->name == "x") return MultiPoly::variable(3, 0);
            if (n->name == "y") return MultiPoly::variable(3, 1);
            if (n->name == "z") return MultiPoly::variable(3, 2);
            if (n->name == "t") {
                if (!field) throw ParseError("'t' needs a field extension");
                return MultiPoly::constant(3, FieldElement::generator(field));
            }
            throw ParseError("'" + n->name + "' is not allowed in a curve");
        }
        case Node::Add:
            return eval_trivariate(n->a.get(), field) + eval_trivariate(n->b.get(), field);
        case Node::Sub:
            return eval_trivariate(n->a.get(), field) - eval_trivariate(n->b.get(), field);
        case Node::Mul:
            return eval_trivariate(n->a.get(), field) * eval_trivariate(n->b.get(), field);
        case Node::Neg:
            return -eval_trivariate(n->a.get(), field);
        case Node::Pow: {
            if (!is_integer(n->value))
                throw ParseError("fractional exponents are only allowed on eps");
            long e = small_long(n->value);
            if (e < 0) throw ParseError("negative exponents are only allowed on eps");
            MultiPoly base = eval_trivariate(n->a.get(), field);
            MultiPoly r = MultiPoly::constant(3, FieldElement(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        case Node::Tail:
            throw ParseError("a truncation marker is not allowed here");
    }
    throw ParseError("malformed expression");
}

Polynomial<FPoly> eval_bivariate(const Node* n, const FieldPtr& field) {
    using XP = Polynomial<FPoly>;
    switch (n->kind) {
        case Node::Num:
            return XP(FPoly(FieldElement(n->value)));
        case Node::Var:
            if (n->name == "x") return XP::variable();
            if (n->name == "eps") return XP(FPoly::variable());
            if (n->name == "t") {
                if (!field) throw ParseError("'t' needs a field extension");
                return XP(FPoly(FieldElement::generator(field)));
            }
            throw ParseError("'" + n->name + "' is not allowed in an expansion input");
        case Node::Add:
            return eval_bivariate(n->a.get(), field) + eval_bivariate(n->b.get(), field);
        case Node::Sub:
            return eval_bivariate(n->a.get(), field) - eval_bivariate(n->b.get(), field);
        case Node::Mul:
            return eval_bivariate(n->a.get(), field) * eval_bivariate(n->b.get(), field);
        case Node::Neg:
            return -eval_bivariate(n->a.get(), field);
        case Node::Pow: {
            if (!is_integer(n->value))
                throw ParseError("an expansion input needs integer exponents");
            long e = small_long(n->value);
            if (e < 0) throw ParseError("negative exponents are not allowed here");
            XP base = eval_bivariate(n->a.get(), field);
            XP r(FPoly(FieldElement(1)));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        case Node::Tail:
            throw ParseError("a truncation marker is not allowed here");
    }
    throw ParseError("malformed expression");
}

} // namespace

PuiseuxSeries parse_puiseux(const std::string& text, const FieldPtr& field) {
    return eval_series(parse_tree(text).get(), field);
}

QPoly parse_minpoly(const std::string& text) { return eval_qpoly(parse_tree(text).get()); }

MultiPoly parse_trivariate(const std::string& text, const FieldPtr& field) {
    return eval_trivariate(parse_tree(text).get(), field);
}

Polynomial<FPoly> parse_bivariate(const std::string& text, const FieldPtr& field) {
    return eval_bivariate(parse_tree(text).get(), field);
}

std::vector<PuiseuxSeries> parse_point_coords(const std::string& text, const FieldPtr& field) {
    Lexer lx(text);
    lx.expect(Tok::LBracket, "'['");
    Parser p(lx);
    std::vector<PuiseuxSeries> coords;
    coords.push_back(eval_series(p.expr().get(), field));
    while (lx.accept(Tok::Colon)) coords.push_back(eval_series(p.expr().get(), field));
    lx.expect(Tok::RBracket, "']'");
    if (lx.peek().kind != Tok::End)
        throw ParseError("trailing input near '" + lx.peek().text + "'");
    return coords;
}

ProjPointK parse_point_k(const std::string& text, const FieldPtr& field) {
    return ProjPointK(parse_point_coords(text, field));
}

ProjPointL parse_point_l(const std::string& text, const FieldPtr& field) {
    std::vector<FieldElement> out;
    for (const auto& c : parse_point_coords(text, field)) {
        if (!c.is_exact()) throw ParseError("point coordinate carries a truncation");
        if (c.terms().empty()) {
            out.push_back(FieldElement(0));
            continue;
        }
        if (c.terms().size() != 1 || sgn(c.terms()[0].exp) != 0)
            throw ParseError("point coordinate is not constant");
        out.push_back(c.terms()[0].coeff);
    }
    return ProjPointL(std::move(out));
}

} // namespace valcurve

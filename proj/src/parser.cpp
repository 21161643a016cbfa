#include "hypersum/parser.hpp"

#include <cctype>

namespace hypersum {

namespace {

// Lift a bare rational function into a term product factor.
TermProduct tp_from_rf(const RationalFunction& rf) {
    TermProduct t;
    t.multiplier = rf;
    return t;
}

}  // namespace

namespace {

struct Lexer {
    enum class Kind { Number, Symbol, Fact, Binomial, LParen, RParen, Star, Slash, Plus, Minus, Caret, Bang, Comma, End };
    struct Token {
        Kind kind;
        std::string text;
        size_t pos;
    };

    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    bool at(Kind k) const { return current_.kind == k; }
    Token expect(Kind k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what, current_.pos);
        return take();
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Kind::End, "", pos_};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_ = {Kind::Number, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "fact") {
                current_ = {Kind::Fact, word, start};
            } else if (word == "binomial") {
                current_ = {Kind::Binomial, word, start};
            } else if (word.size() == 1 && std::islower(static_cast<unsigned char>(word[0]))) {
                current_ = {Kind::Symbol, word, start};
            } else {
                throw ParseError("unknown identifier '" + word + "'", start);
            }
            return;
        }
        Kind k;
        switch (c) {
            case '(': k = Kind::LParen; break;
            case ')': k = Kind::RParen; break;
            case '*': k = Kind::Star; break;
            case '/': k = Kind::Slash; break;
            case '+': k = Kind::Plus; break;
            case '-': k = Kind::Minus; break;
            case '^': k = Kind::Caret; break;
            case '!': k = Kind::Bang; break;
            case ',': k = Kind::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        current_ = {k, std::string(1, c), pos_};
        ++pos_;
    }

    std::string text_;
    size_t pos_ = 0;
    Token current_{Kind::End, "", 0};
};

using Kind = Lexer::Kind;

// ----------------------------------------------------- rational functions

class ExpressionParser {
public:
    explicit ExpressionParser(Lexer& lex) : lex_(lex) {}

    // expr := term (('+'|'-') term)*
    RationalFunction parse_expression() {
        RationalFunction value = parse_signed_term();
        while (lex_.at(Kind::Plus) || lex_.at(Kind::Minus)) {
            bool minus = lex_.take().kind == Kind::Minus;
            RationalFunction rhs = parse_product();
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

private:
    RationalFunction parse_signed_term() {
        bool minus = false;
        while (lex_.at(Kind::Minus) || lex_.at(Kind::Plus)) minus ^= (lex_.take().kind == Kind::Minus);
        RationalFunction v = parse_product();
        return minus ? -v : v;
    }

    // product := factor (('*'|'/') factor | juxtaposed factor)*
    RationalFunction parse_product() {
        RationalFunction value = parse_factor();
        for (;;) {
            if (lex_.at(Kind::Star)) {
                lex_.take();
                value *= parse_factor();
            } else if (lex_.at(Kind::Slash)) {
                lex_.take();
                value /= parse_factor();
            } else if (lex_.at(Kind::Symbol) || lex_.at(Kind::LParen) || lex_.at(Kind::Number)) {
                value *= parse_factor();  // juxtaposition, e.g. "2n" or "(n+1)(n+2)"
            } else {
                break;
            }
        }
        return value;
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_atom();
        if (lex_.at(Kind::Caret)) {
            lex_.take();
            bool neg = false;
            while (lex_.at(Kind::Minus)) {
                neg = !neg;
                lex_.take();
            }
            auto tok = lex_.expect(Kind::Number, "integer exponent");
            long e = std::stol(tok.text);
            if (neg) e = -e;
            RationalFunction r(1L);
            for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
            return e < 0 ? r.reciprocal() : r;
        }
        return base;
    }

    RationalFunction parse_atom() {
        if (lex_.at(Kind::Number)) {
            auto tok = lex_.take();
            return RationalFunction(rational_from_string(tok.text));
        }
        if (lex_.at(Kind::Symbol)) {
            auto tok = lex_.take();
            return RationalFunction(Polynomial::variable(Symbol::intern(tok.text)));
        }
        if (lex_.at(Kind::LParen)) {
            lex_.take();
            RationalFunction v = parse_expression();
            lex_.expect(Kind::RParen, "')'");
            return v;
        }
        throw ParseError("expected number, symbol or '('", lex_.peek().pos);
    }

    Lexer& lex_;
};

LinearForm require_linear_form(const RationalFunction& rf, size_t pos) {
    if (!rf.is_polynomial()) throw ParseError("expected an integer-linear expression", pos);
    auto lf = LinearForm::from_polynomial(rf.num() * (Rational(1) / rf.den().constant_value()));
    if (!lf)
        throw ParseError("expected integer coefficients in linear expression", pos);
    return *lf;
}

// -------------------------------------------------------------- term parse

class TermParser {
public:
    explicit TermParser(Lexer& lex) : lex_(lex) {}

    TermProduct parse() {
        TermProduct result;
        bool negate = false;
        while (lex_.at(Kind::Minus)) {
            negate = !negate;
            lex_.take();
        }
        result = parse_factor();
        for (;;) {
            if (lex_.at(Kind::Star)) {
                lex_.take();
                result = tp_multiply(result, parse_factor());
            } else if (lex_.at(Kind::Slash)) {
                lex_.take();
                result = tp_multiply(result, tp_inverse(parse_factor()));
            } else {
                break;
            }
        }
        if (negate) result.multiplier = -result.multiplier;
        return result;
    }

private:
    TermProduct parse_factor() {
        size_t start = lex_.peek().pos;
        if (lex_.at(Kind::Fact)) {
            lex_.take();
            lex_.expect(Kind::LParen, "'('");
            ExpressionParser inner(lex_);
            RationalFunction arg = inner.parse_expression();
            lex_.expect(Kind::RParen, "')'");
            return factorial_term(require_linear_form(arg, start));
        }
        if (lex_.at(Kind::Binomial)) {
            lex_.take();
            lex_.expect(Kind::LParen, "'('");
            ExpressionParser inner(lex_);
            LinearForm u = require_linear_form(inner.parse_expression(), start);
            lex_.expect(Kind::Comma, "','");
            LinearForm v = require_linear_form(inner.parse_expression(), start);
            lex_.expect(Kind::RParen, "')'");
            // binomial(u, v) = u! / (v! (u-v)!)
            TermProduct t;
            t.base.multiply_factorial(u, 1);
            t.base.multiply_factorial(v, -1);
            t.base.multiply_factorial(u - v, -1);
            return t;
        }

        RationalFunction atom;
        if (lex_.at(Kind::Number)) {
            atom = RationalFunction(rational_from_string(lex_.take().text));
        } else if (lex_.at(Kind::Symbol)) {
            atom = RationalFunction(Polynomial::variable(Symbol::intern(lex_.take().text)));
        } else if (lex_.at(Kind::LParen)) {
            lex_.take();
            ExpressionParser inner(lex_);
            atom = inner.parse_expression();
            lex_.expect(Kind::RParen, "')'");
        } else {
            throw ParseError("expected a term factor", start);
        }

        if (lex_.at(Kind::Bang)) {
            lex_.take();
            return factorial_term(require_linear_form(atom, start));
        }
        if (lex_.at(Kind::Caret)) {
            lex_.take();
            LinearForm e = parse_exponent();
            return power_term(atom, e, start);
        }
        return tp_from_rf(atom);
    }

    LinearForm parse_exponent() {
        size_t start = lex_.peek().pos;
        bool neg = false;
        while (lex_.at(Kind::Minus)) {
            neg = !neg;
            lex_.take();
        }
        RationalFunction v;
        if (lex_.at(Kind::Number)) {
            v = RationalFunction(rational_from_string(lex_.take().text));
        } else if (lex_.at(Kind::Symbol)) {
            v = RationalFunction(Polynomial::variable(Symbol::intern(lex_.take().text)));
        } else if (lex_.at(Kind::LParen)) {
            lex_.take();
            ExpressionParser inner(lex_);
            v = inner.parse_expression();
            lex_.expect(Kind::RParen, "')'");
        } else {
            throw ParseError("expected an exponent", start);
        }
        LinearForm lf = require_linear_form(v, start);
        return neg ? -lf : lf;
    }

    static TermProduct factorial_term(const LinearForm& arg) {
        TermProduct t;
        t.base.multiply_factorial(arg, 1);
        return t;
    }

    // base^exponent where the base is an arbitrary parsed subexpression.
    TermProduct power_term(const RationalFunction& base, const LinearForm& e, size_t pos) {
        TermProduct t;
        if (base.is_zero()) throw ParseError("zero power base", pos);
        Polynomial num = base.num(), den = base.den();
        bool nk_base = num.contains(Symbol::n()) || num.contains(Symbol::k()) ||
                       den.contains(Symbol::n()) || den.contains(Symbol::k());
        if (nk_base) {
            if (!e.is_constant())
                throw ParseError("power base involving n or k needs a constant exponent", pos);
            long long c = e.constant();
            RationalFunction r(1L);
            for (long long i = 0; i < (c < 0 ? -c : c); ++i) r *= base;
            t.multiplier = c < 0 ? r.reciprocal() : r;
            return t;
        }
        t.base.multiply_power(num, e);
        if (!(den.is_constant() && den.constant_value() == 1)) t.base.multiply_power(den, -e);
        return t;
    }

    Lexer& lex_;
};

}  // namespace

TermProduct parse_term_product(const std::string& text) {
    Lexer lex(text);
    TermParser parser(lex);
    TermProduct t = parser.parse();
    if (!lex.at(Kind::End)) throw ParseError("trailing input", lex.peek().pos);
    return tp_normalize(t);
}

HypergeometricTerm parse_term(const std::string& text) {
    TermProduct t = parse_term_product(text);
    if (auto pure = absorb(t)) return *pure;
    throw ParseError("polynomial denominators make this a term with rational multiplier", 0);
}

RationalFunction parse_rational_function(const std::string& text) {
    Lexer lex(text);
    ExpressionParser parser(lex);
    RationalFunction v = parser.parse_expression();
    if (!lex.at(Kind::End)) throw ParseError("trailing input", lex.peek().pos);
    return v;
}

Polynomial parse_polynomial(const std::string& text) {
    RationalFunction v = parse_rational_function(text);
    if (!v.is_polynomial()) throw ParseError("expected a polynomial, found a quotient", 0);
    return v.num() * (Rational(1) / v.den().constant_value());
}

LinearForm parse_linear_form(const std::string& text) {
    return require_linear_form(parse_rational_function(text), 0);
}

}  // namespace hypersum

#include "hypersum/ore.hpp"

#include "hypersum/linear_system.hpp"
#include "hypersum/parser.hpp"

#include <sstream>

namespace hypersum {

OreOperator OreOperator::identity() { return coefficient(RationalFunction(1L)); }

OreOperator OreOperator::coefficient(const RationalFunction& c) { return monomial(c, 0, 0); }

OreOperator OreOperator::monomial(const RationalFunction& c, unsigned n_power, unsigned k_power) {
    OreOperator op;
    if (!c.is_zero()) op.monomials_.emplace(Key{n_power, k_power}, c);
    return op;
}

OreOperator OreOperator::shift_n() { return monomial(RationalFunction(1L), 1, 0); }
OreOperator OreOperator::shift_k() { return monomial(RationalFunction(1L), 0, 1); }

unsigned OreOperator::degree_N() const {
    unsigned d = 0;
    for (const auto& [key, c] : monomials_) d = std::max(d, key.first);
    return d;
}

unsigned OreOperator::degree_K() const {
    unsigned d = 0;
    for (const auto& [key, c] : monomials_) d = std::max(d, key.second);
    return d;
}

bool OreOperator::involves(Symbol s) const {
    for (const auto& [key, c] : monomials_)
        if (c.contains(s)) return true;
    return false;
}

void OreOperator::prune() {
    for (auto it = monomials_.begin(); it != monomials_.end();)
        it = it->second.is_zero() ? monomials_.erase(it) : std::next(it);
}

OreOperator OreOperator::operator-() const {
    OreOperator r(*this);
    for (auto& [key, c] : r.monomials_) c = -c;
    return r;
}

OreOperator& OreOperator::operator+=(const OreOperator& o) {
    for (const auto& [key, c] : o.monomials_) {
        auto [it, fresh] = monomials_.emplace(key, c);
        if (!fresh) it->second += c;
    }
    prune();
    return *this;
}

OreOperator OreOperator::operator+(const OreOperator& o) const {
    OreOperator r(*this);
    r += o;
    return r;
}

OreOperator OreOperator::operator-(const OreOperator& o) const { return *this + (-o); }

OreOperator OreOperator::operator*(const OreOperator& o) const {
    OreOperator r;
    for (const auto& [ka, ca] : monomials_)
        for (const auto& [kb, cb] : o.monomials_) {
            // N^a K^b c(n,k) = c(n+a, k+b) N^a K^b
            RationalFunction c = ca * cb.shift(Symbol::n(), static_cast<long>(ka.first))
                                          .shift(Symbol::k(), static_cast<long>(ka.second));
            Key key{ka.first + kb.first, ka.second + kb.second};
            auto [it, fresh] = r.monomials_.emplace(key, c);
            if (!fresh) it->second += c;
        }
    r.prune();
    return r;
}

RationalFunction OreOperator::apply(const TermProduct& F) const {
    RationalFunction total;
    for (const auto& [key, c] : monomials_) {
        // F(n+a, k+b)/F(n,k) = [F(n+a,k+b)/F(n,k+b)] [F(n,k+b)/F(n,k)]
        RationalFunction rho = tp_ratio_power(F, Symbol::n(), key.first)
                                   .shift(Symbol::k(), static_cast<long>(key.second)) *
                               tp_ratio_power(F, Symbol::k(), key.second);
        total += c * rho;
    }
    return total;
}

std::string OreOperator::to_string() const {
    if (monomials_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = monomials_.rbegin(); it != monomials_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (key.first > 0) {
            out << "*N";
            if (key.first > 1) out << "^" << key.first;
        }
        if (key.second > 0) {
            out << "*K";
            if (key.second > 1) out << "^" << key.second;
        }
    }
    return out.str();
}

std::pair<OreOperator, OreOperator> reduce_mod_delta(const OreOperator& R) {
    OreOperator S, Rbar;
    for (const auto& [key, c] : R.monomials()) {
        unsigned a = key.first, b = key.second;
        RationalFunction base = c.shift(Symbol::k(), -static_cast<long>(b));
        // c N^a K^b = c(n,k-b) N^a + (K-1)(K^(b-1)+...+1) c(n,k-b) N^a
        S += OreOperator::monomial(base, a, 0);
        for (unsigned t = 0; t < b; ++t)
            Rbar += OreOperator::monomial(base.shift(Symbol::k(), static_cast<long>(t)), a, t);
    }
    return {S, Rbar};
}

std::pair<OreOperator, OreOperator> right_divide(const OreOperator& S, const OreOperator& S1) {
    if (S1.is_zero()) throw Error("right_divide: division by zero operator");
    auto check = [](const OreOperator& op, const char* name) {
        if (op.degree_K() > 0 || op.involves(Symbol::k()))
            throw Error(std::string("right_divide: ") + name + " must be free of K and k");
    };
    check(S, "dividend");
    check(S1, "divisor");

    auto lc = [](const OreOperator& op, unsigned d) {
        auto it = op.monomials().find(OreOperator::Key{d, 0});
        return it == op.monomials().end() ? RationalFunction() : it->second;
    };

    unsigned d1 = S1.degree_N();
    RationalFunction lc1 = lc(S1, d1);
    OreOperator quotient, rem = S;
    while (!rem.is_zero() && rem.degree_N() >= d1) {
        unsigned d = rem.degree_N();
        RationalFunction lcr = lc(rem, d);
        if (lcr.is_zero()) throw Error("right_divide: missing leading coefficient");
        // (c N^(d-d1)) * S1 has leading coefficient c * lc1(n + d - d1).
        RationalFunction c = lcr / lc1.shift(Symbol::n(), static_cast<long>(d - d1));
        OreOperator t = OreOperator::monomial(c, d - d1, 0);
        quotient += t;
        rem = rem - t * S1;
        if (!rem.is_zero() && rem.degree_N() == d && !lc(rem, d).is_zero())
            throw Error("right_divide: no degree progress");
    }
    return {quotient, rem};
}

std::string EliminationBounds::to_string() const {
    return "deg_k<=" + std::to_string(deg_k) + ", deg_N<=" + std::to_string(deg_N) +
           ", deg_K<=" + std::to_string(deg_K);
}

namespace {

// Substitute rational-function values for symbols that occur linearly in
// polynomial coefficients.
RationalFunction substitute_linear_unknowns(const RationalFunction& c,
                                            const std::vector<Symbol>& unknowns,
                                            const std::vector<RationalFunction>& values) {
    Polynomial num = c.num();
    RationalFunction result;
    Polynomial rest = num;
    for (size_t i = 0; i < unknowns.size(); ++i) {
        Polynomial ci = num.coefficient_of(unknowns[i], 1);
        if (ci.is_zero()) continue;
        result += RationalFunction(ci) * values[i];
        rest -= ci * Polynomial::variable(unknowns[i]);
    }
    result += RationalFunction(rest);
    return result / RationalFunction(c.den());
}

OreOperator substitute_linear_unknowns(const OreOperator& op, const std::vector<Symbol>& unknowns,
                                       const std::vector<RationalFunction>& values) {
    OreOperator r;
    for (const auto& [key, c] : op.monomials())
        r += OreOperator::monomial(substitute_linear_unknowns(c, unknowns, values), key.first,
                                   key.second);
    return r;
}

// Scale an operator pair solution by the lcm of all coefficient denominators
// so the reported cofactors have polynomial coefficients.
Polynomial denominator_lcm(const OreOperator& op, Polynomial acc) {
    for (const auto& [key, c] : op.monomials()) {
        Polynomial g = poly_gcd(acc, c.den());
        acc = *(acc * c.den()).divide_exact(g);
    }
    return acc;
}

std::optional<EliminationResult> try_eliminate(const OreOperator& P, const OreOperator& Q,
                                               const EliminationBounds& bounds) {
    // Ansatz operators with unknown rational-in-n coefficients.
    std::vector<Symbol> unknowns;
    auto make_ansatz = [&](const std::string& prefix) {
        OreOperator op;
        for (unsigned a = 0; a <= bounds.deg_N; ++a)
            for (unsigned b = 0; b <= bounds.deg_K; ++b)
                for (unsigned i = 0; i <= bounds.deg_k; ++i) {
                    Symbol u = Symbol::intern("_" + prefix + std::to_string(a) + "_" +
                                              std::to_string(b) + "_" + std::to_string(i));
                    unknowns.push_back(u);
                    Polynomial coeff = Polynomial::variable(u) *
                                       Polynomial::monomial(Rational(1), Monomial::variable(Symbol::k(), i));
                    op += OreOperator::monomial(RationalFunction(coeff), a, b);
                }
        return op;
    };
    OreOperator A = make_ansatz("a");
    OreOperator B = make_ansatz("b");

    OreOperator combo = A * P + B * Q;
    auto [S, Rbar] = reduce_mod_delta(combo);

    // Every k power >= 1 surviving in S must vanish.
    std::vector<Polynomial> equations;
    for (const auto& [key, c] : S.monomials()) {
        if (!c.is_polynomial()) throw Error("eliminate: expected polynomial coefficients");
        Polynomial poly = c.num() * (Rational(1) / c.den().constant_value());
        Polynomial k_free = poly.coefficient_of(Symbol::k(), 0);
        equations.push_back(poly - k_free);
    }
    auto system = extract_linear_system(equations, unknowns, {Symbol::k()});
    LinearSolution sol = solve_linear(system.matrix, system.rhs);
    if (!sol.solvable()) return std::nullopt;

    for (const auto& basis : sol.nullspace) {
        OreOperator Ssub = substitute_linear_unknowns(S, unknowns, basis);
        if (Ssub.is_zero()) continue;

        OreOperator Asub = substitute_linear_unknowns(A, unknowns, basis);
        OreOperator Bsub = substitute_linear_unknowns(B, unknowns, basis);

        // Clear denominators: d(n,...) (A P + B Q) = (dA) P + (dB) Q.
        Polynomial d(Rational(1));
        d = denominator_lcm(Asub, d);
        d = denominator_lcm(Bsub, d);
        if (!(d.is_constant() && d.constant_value() == 1)) {
            OreOperator scale = OreOperator::coefficient(RationalFunction(d));
            Asub = scale * Asub;
            Bsub = scale * Bsub;
        }

        OreOperator combo2 = Asub * P + Bsub * Q;
        auto [S2, Rbar2] = reduce_mod_delta(combo2);
        if (S2.involves(Symbol::k()) || S2.degree_K() > 0)
            throw Error("eliminate: residual k dependence");
        // Exact identity check before returning.
        OreOperator delta = OreOperator::shift_k() - OreOperator::identity();
        if (!(S2 + delta * Rbar2 == combo2)) throw Error("eliminate: reconstruction failed");
        return EliminationResult{S2, Asub, Bsub, Rbar2};
    }
    return std::nullopt;
}

}  // namespace

EliminationOutcome eliminate(const OreOperator& P, const OreOperator& Q,
                             const EliminationBounds& bounds, bool retry) {
    EliminationOutcome outcome;
    outcome.bounds_tried = bounds;
    if (auto r = try_eliminate(P, Q, bounds)) {
        outcome.result = std::move(r);
        return outcome;
    }
    if (retry) {
        outcome.bounds_tried = bounds.doubled();
        outcome.result = try_eliminate(P, Q, outcome.bounds_tried);
    }
    return outcome;
}

std::pair<OreOperator, OreOperator> annihilator_pair(const TermProduct& F) {
    RationalFunction rn = F.ratio(Symbol::n());
    RationalFunction rk = F.ratio(Symbol::k());
    OreOperator P = OreOperator::monomial(RationalFunction(rn.den()), 1, 0) -
                    OreOperator::coefficient(RationalFunction(rn.num()));
    OreOperator Q = OreOperator::monomial(RationalFunction(rk.den()), 0, 1) -
                    OreOperator::coefficient(RationalFunction(rk.num()));
    return {P, Q};
}

// ------------------------------------------------------------- parsing

namespace {

struct OpLexer {
    explicit OpLexer(const std::string& text) : text_(text) {}

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        char c = peek();
        if (pos_ < text_.size()) ++pos_;
        return c;
    }
    size_t pos() const { return pos_; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string text_;
    size_t pos_ = 0;
};

class OpParser {
public:
    explicit OpParser(OpLexer& lex) : lex_(lex) {}

    OreOperator parse_expression() {
        OreOperator value = parse_signed_term();
        for (;;) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.take();
                value = value + parse_term();
            } else if (c == '-') {
                lex_.take();
                value = value - parse_term();
            } else {
                break;
            }
        }
        return value;
    }

private:
    OreOperator parse_signed_term() {
        bool neg = false;
        while (lex_.peek() == '-' || lex_.peek() == '+') neg ^= (lex_.take() == '-');
        OreOperator t = parse_term();
        return neg ? -t : t;
    }

    // Juxtaposition is the noncommutative product: (n-k+1)N, NQ, K(n+k).
    OreOperator parse_term() {
        OreOperator value = parse_factor();
        for (;;) {
            char c = lex_.peek();
            if (c == '*') {
                lex_.take();
                value = value * parse_factor();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                value = value * parse_factor();
            } else {
                break;
            }
        }
        return value;
    }

    OreOperator parse_factor() {
        OreOperator base = parse_atom();
        if (lex_.peek() == '^') {
            lex_.take();
            long e = parse_integer();
            if (e < 0) throw ParseError("operator powers must be non-negative", lex_.pos());
            OreOperator r = OreOperator::identity();
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    long parse_integer() {
        bool neg = false;
        while (lex_.peek() == '-') {
            neg = !neg;
            lex_.take();
        }
        if (!std::isdigit(static_cast<unsigned char>(lex_.peek())))
            throw ParseError("expected integer", lex_.pos());
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(lex_.peek()))) v = v * 10 + (lex_.take() - '0');
        return neg ? -v : v;
    }

    OreOperator parse_atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.take();
            OreOperator inner = parse_expression();
            if (lex_.take() != ')') throw ParseError("expected ')'", lex_.pos());
            return inner;
        }
        if (c == 'N') {
            lex_.take();
            return OreOperator::shift_n();
        }
        if (c == 'K') {
            lex_.take();
            return OreOperator::shift_k();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = parse_integer();
            return OreOperator::coefficient(RationalFunction(Rational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) && std::islower(static_cast<unsigned char>(c))) {
            lex_.take();
            return OreOperator::coefficient(
                RationalFunction(Polynomial::variable(Symbol::intern(std::string(1, c)))));
        }
        throw ParseError("expected an operator atom", lex_.pos());
    }

    OpLexer& lex_;
};

}  // namespace

OreOperator parse_ore_operator(const std::string& text) {
    OpLexer lex(text);
    OpParser parser(lex);
    OreOperator op = parser.parse_expression();
    if (lex.peek() != '\0') throw ParseError("trailing input in operator", lex.pos());
    return op;
}

}  // namespace hypersum

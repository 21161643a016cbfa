#include "hypersum/rational_function.hpp"

namespace hypersum {

RationalFunction::RationalFunction(const Polynomial& num) : num_(num) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw Error("zero denominator in rational function");
    reduce();
}

RationalFunction::RationalFunction(const Rational& c) : num_(Polynomial(c)) {}
RationalFunction::RationalFunction(long c) : num_(Polynomial(c)) {}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    // Normalize the denominator: integer-primitive, positive leading coeff.
    Rational c = den_.rational_content();
    if (den_.leading_sign() < 0) c = -c;
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw Error("constant_value on non-constant rational function");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw Error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) { return *this = *this + o; }
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this = *this - o; }
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) { return *this = *this * o; }
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this = *this / o; }

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::substitute(Symbol s, const Polynomial& value) const {
    return RationalFunction(num_.substitute(s, value), den_.substitute(s, value));
}

RationalFunction RationalFunction::shift(Symbol s, long amount) const {
    if (amount == 0) return *this;
    return RationalFunction(num_.shift(s, amount), den_.shift(s, amount));
}

RationalFunction RationalFunction::substitute_values(const std::map<Symbol, Rational>& assignment) const {
    return RationalFunction(num_.substitute_values(assignment), den_.substitute_values(assignment));
}

std::optional<Rational> RationalFunction::evaluate(const std::map<Symbol, Rational>& assignment) const {
    Rational d = den_.evaluate(assignment);
    if (d == 0) return std::nullopt;
    return num_.evaluate(assignment) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.terms().size() > 1 || den_.leading_monomial().total_degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace hypersum

#pragma once

#include "hypersum/polynomial.hpp"

namespace hypersum {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and the
/// denominator is integer-primitive with positive leading coefficient.
/// Equality is therefore plain representational equality.
class RationalFunction {
public:
    RationalFunction() = default;  // zero
    RationalFunction(const Polynomial& num);
    RationalFunction(const Polynomial& num, const Polynomial& den);
    RationalFunction(const Rational& c);
    RationalFunction(long c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction reciprocal() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }
    RationalFunction substitute(Symbol s, const Polynomial& value) const;
    RationalFunction shift(Symbol s, long amount) const;
    RationalFunction substitute_values(const std::map<Symbol, Rational>& assignment) const;

    /// nullopt when the denominator vanishes at the point.
    std::optional<Rational> evaluate(const std::map<Symbol, Rational>& assignment) const;

    std::string to_string() const;

private:
    void reduce();
    Polynomial num_;
    Polynomial den_ = Polynomial(Rational(1));
};

}  // namespace hypersum

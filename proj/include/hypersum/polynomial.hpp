#pragma once

#include "hypersum/rational.hpp"
#include "hypersum/symbols.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hypersum {

/// Exponent vector sorted by symbol id; zero exponents are never stored.
/// Ordered graded-lexicographically so leading terms are well defined.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(Symbol s, unsigned e = 1);

    unsigned degree(Symbol s) const;
    unsigned total_degree() const;
    bool is_one() const { return factors_.empty(); }
    const std::vector<std::pair<Symbol, unsigned>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    std::optional<Monomial> divide(const Monomial& o) const;

    /// Keep only the exponents of `vars` (true) or everything else (false).
    Monomial restricted(const std::vector<Symbol>& vars, bool keep) const;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<Symbol, unsigned>> factors_;
};

/// Sparse multivariate polynomial over Q. Values are immutable in spirit:
/// all operations return new polynomials, so concurrent reads are safe.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c);
    static Polynomial variable(Symbol s);
    static Polynomial monomial(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; requires is_constant().
    Rational constant_value() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Degree in one variable; -1 for the zero polynomial.
    long degree(Symbol s) const;
    long total_degree() const;

    bool contains(Symbol s) const;
    std::vector<Symbol> variables() const;

    /// Coefficient of s^power, a polynomial in the remaining variables.
    Polynomial coefficient_of(Symbol s, unsigned power) const;
    /// Dense coefficient list [c0..cd] viewing *this in Q[rest][s].
    std::vector<Polynomial> coefficients_in(Symbol s) const;
    static Polynomial from_coefficients(Symbol s, const std::vector<Polynomial>& cs);
    Polynomial leading_coefficient(Symbol s) const;

    /// Group terms by their monomial restricted to `vars`; the mapped values
    /// are polynomials in the remaining variables.
    std::map<Monomial, Polynomial> split_by(const std::vector<Symbol>& vars) const;

    Polynomial substitute(Symbol s, const Polynomial& value) const;
    /// Simultaneous substitution (images may reuse the replaced symbols).
    Polynomial substitute_all(const std::map<Symbol, Polynomial>& images) const;
    /// var -> var + amount, exact.
    Polynomial shift(Symbol s, long amount) const;

    /// Full evaluation; every variable present must be assigned.
    Rational evaluate(const std::map<Symbol, Rational>& assignment) const;
    /// Partial evaluation: substitute the given values, keep the rest.
    Polynomial substitute_values(const std::map<Symbol, Rational>& assignment) const;

    /// Exact division; nullopt when o does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial& o) const;

    /// Leading term under the canonical monomial order.
    const Monomial& leading_monomial() const;
    const Rational& leading_rational() const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients; 0 for the zero polynomial. The sign of the leading
    /// coefficient is reported separately by leading_sign().
    Rational rational_content() const;
    int leading_sign() const;
    /// Integer-primitive associate with positive leading coefficient.
    Polynomial normalized() const;

    std::string to_string() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

private:
    void prune();
    std::map<Monomial, Rational> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Greatest common divisor, normalized (integer-primitive, positive leading
/// coefficient). gcd(0,0) = 0; the gcd of nonzero constants is 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Resultant with respect to `var` via the Sylvester matrix, evaluated by
/// fraction-free (Bareiss) elimination. Degree-0 conventions:
/// res(c, q) = c^deg(q); res of two constants is 1; throws if both are zero.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Symbol var);

/// All integer roots of a nonzero univariate polynomial, ascending.
/// Throws on the zero polynomial ("infinitely many roots").
std::vector<Integer> integer_roots(const Polynomial& p);

}  // namespace hypersum

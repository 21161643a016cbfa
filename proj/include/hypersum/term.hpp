#pragma once

#include "hypersum/linear_form.hpp"
#include "hypersum/rational_function.hpp"

#include <optional>
#include <vector>

namespace hypersum {

/// (argument)!^exponent. A shadowed factor records that it arose from the
/// substitution L! -> (-1)^L/(-L-1)!; the sign lives in the owning term's
/// sign exponent, so the stored pair always reads as a plain factorial power.
struct FactorialFactor {
    LinearForm argument;
    long exponent = 1;
    bool shadowed = false;

    bool operator==(const FactorialFactor&) const = default;
};

/// base^exponent with a parameter-only polynomial base (rational constants
/// are constant polynomials) and an integer-linear exponent.
struct PowerFactor {
    Polynomial base;
    LinearForm exponent;

    bool operator==(const PowerFactor&) const = default;
};

using EvalPoint = std::map<Symbol, Integer>;

std::map<Symbol, Rational> to_rational_point(const EvalPoint& point);

/// Canonical product form of a proper hypergeometric term:
///   constant * (-1)^sign * prod base^exp * polynomialPart * prod (arg)!^e.
class HypergeometricTerm {
public:
    HypergeometricTerm() = default;  // the term 1

    static HypergeometricTerm one();

    const Rational& constant() const { return constant_; }
    const LinearForm& sign_exponent() const { return sign_exponent_; }
    const std::vector<PowerFactor>& powers() const { return powers_; }
    const Polynomial& polynomial_part() const { return polynomial_part_; }
    const std::vector<FactorialFactor>& factorials() const { return factorials_; }

    void multiply_constant(const Rational& c);
    void multiply_sign(const LinearForm& exponent);
    void multiply_power(const Polynomial& base, const LinearForm& exponent);
    void multiply_polynomial(const Polynomial& p);
    void multiply_factorial(const LinearForm& argument, long exponent, bool shadowed = false);
    void multiply_term(const HypergeometricTerm& o);

    HypergeometricTerm operator*(const HypergeometricTerm& o) const;

    /// Reciprocal term; requires a constant polynomial part.
    HypergeometricTerm inverse() const;

    bool depends_on(Symbol s) const;

    /// t(var+1)/t(var) as a reduced rational function.
    RationalFunction ratio(Symbol var) const;
    /// t(var+steps)/t(var).
    RationalFunction ratio_power(Symbol var, unsigned steps) const;

    /// Exact value; nullopt is Undefined (a numerator factorial at a negative
    /// integer, or a vanishing power base with negative exponent).
    std::optional<Rational> evaluate(const EvalPoint& point) const;

    /// Indices of the factors the default rule shadows (n,k coefficient sum
    /// nonzero).
    std::vector<size_t> default_shadow_selection() const;
    HypergeometricTerm shadow(const std::vector<size_t>& selection) const;
    HypergeometricTerm shadow_default() const;

    /// Simultaneous affine reindexing of n and k (images must be integral
    /// linear forms; parameters cannot be remapped).
    HypergeometricTerm affine_substitute(const std::map<Symbol, LinearForm>& images) const;

    std::string to_string() const;

    bool operator==(const HypergeometricTerm&) const = default;

private:
    void normalize();

    Rational constant_ = 1;
    LinearForm sign_exponent_;
    std::vector<PowerFactor> powers_;
    Polynomial polynomial_part_ = Polynomial(Rational(1));
    std::vector<FactorialFactor> factorials_;
};

/// multiplier(n,k) * base — the closure of terms under the rational-function
/// multipliers produced by Gosper antidifferences and WZ certificates.
struct TermProduct {
    RationalFunction multiplier = RationalFunction(1L);
    HypergeometricTerm base;

    bool is_zero() const { return multiplier.is_zero(); }
    RationalFunction ratio(Symbol var) const;
    std::optional<Rational> evaluate(const EvalPoint& point) const;
    std::string to_string() const;
};

/// Fold the multiplier into the term: numerator factors merge with adjacent
/// factorials or the polynomial part; denominator factors must cancel against
/// factorials. nullopt when a denominator factor cannot be absorbed.
std::optional<HypergeometricTerm> absorb(const TermProduct& product);

TermProduct tp_multiply(const TermProduct& a, const TermProduct& b);
TermProduct tp_inverse(const TermProduct& t);
/// Canonical shape: try to absorb; otherwise leave only a denominator in the
/// multiplier and push the numerator into the base.
TermProduct tp_normalize(const TermProduct& t);
/// t(var+steps)/t(var).
RationalFunction tp_ratio_power(const TermProduct& t, Symbol var, unsigned steps);

/// Semantic equality: equal shift ratios in every variable and equal values
/// on a sample of admissible points.
bool same_term_values(const TermProduct& a, const TermProduct& b,
                      const std::vector<Symbol>& vars, const EvalPoint& sample);

}  // namespace hypersum

#pragma once

#include "hypersum/polynomial.hpp"

#include <map>

namespace hypersum {

/// Integer-linear combination of symbols plus an integer constant; the shape
/// of every factorial argument and power exponent (an + bk + c with integer
/// a, b, c and integer coefficients on free parameters).
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(long long constant) : constant_(constant) {}
    static LinearForm variable(Symbol s, long long coeff = 1);

    long long coeff(Symbol s) const;
    long long constant() const { return constant_; }
    const std::map<Symbol, long long>& coeffs() const { return coeffs_; }

    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }
    bool contains(Symbol s) const { return coeff(s) != 0; }
    bool depends_on_parameters() const;

    LinearForm operator-() const;
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator*(long long c) const;
    LinearForm& operator+=(const LinearForm& o);
    bool operator==(const LinearForm&) const = default;
    bool operator<(const LinearForm& o) const;

    /// Replace each mapped symbol by a linear form (affine substitution);
    /// unmapped symbols stay put.
    LinearForm substitute(const std::map<Symbol, LinearForm>& images) const;

    Integer evaluate(const std::map<Symbol, Integer>& assignment) const;

    Polynomial to_polynomial() const;
    /// nullopt unless p is linear with integer coefficients and constant.
    static std::optional<LinearForm> from_polynomial(const Polynomial& p);

    /// Reduce all coefficients mod 2 (canonical form of (-1)^L exponents).
    LinearForm reduced_mod2() const;

    std::string to_string() const;

private:
    void prune();
    std::map<Symbol, long long> coeffs_;
    long long constant_ = 0;
};

}  // namespace hypersum

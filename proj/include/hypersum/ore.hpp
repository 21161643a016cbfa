#pragma once

#include "hypersum/term.hpp"

#include <map>
#include <optional>

namespace hypersum {

/// Element of the shift algebra C<n,k,N,K> with the relations NK = KN,
/// Nk = kN, Kn = nK, nk = kn, Nn = (n+1)N, Kk = (k+1)K. Stored in
/// coefficient-left normal form: a map from (N power, K power) to the
/// coefficient, which is a rational function in n, k and the parameters
/// (polynomial in all the shipped constructions; rational coefficients keep
/// division closed).
class OreOperator {
public:
    using Key = std::pair<unsigned, unsigned>;

    OreOperator() = default;  // zero
    static OreOperator identity();
    static OreOperator coefficient(const RationalFunction& c);
    static OreOperator monomial(const RationalFunction& c, unsigned n_power, unsigned k_power);
    static OreOperator shift_n();
    static OreOperator shift_k();

    const std::map<Key, RationalFunction>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }
    unsigned degree_N() const;
    unsigned degree_K() const;
    bool involves_K() const { return degree_K() > 0; }
    bool involves(Symbol s) const;

    OreOperator operator-() const;
    OreOperator operator+(const OreOperator& o) const;
    OreOperator operator-(const OreOperator& o) const;
    /// Noncommutative product; shift powers commute past coefficients by
    /// shifting their arguments.
    OreOperator operator*(const OreOperator& o) const;
    OreOperator& operator+=(const OreOperator& o);

    bool operator==(const OreOperator& o) const { return monomials_ == o.monomials_; }

    /// Apply to a term: the multiplier of F in (this F), a rational function.
    RationalFunction apply(const TermProduct& F) const;

    std::string to_string() const;

private:
    void prune();
    std::map<Key, RationalFunction> monomials_;
};

/// R = S + (K-1) Rbar with S free of K, computed monomial-wise, honoring the
/// rule that (K-1)-multiples may only be multiplied from the right.
std::pair<OreOperator, OreOperator> reduce_mod_delta(const OreOperator& R);

/// Right division of K-free, k-free operators over the rational-function
/// field in n: S = T * S1 + remainder, deg_N remainder < deg_N S1.
std::pair<OreOperator, OreOperator> right_divide(const OreOperator& S, const OreOperator& S1);

struct EliminationBounds {
    unsigned deg_k = 2;
    unsigned deg_N = 1;
    unsigned deg_K = 1;
    EliminationBounds doubled() const { return {2 * deg_k, 2 * deg_N, 2 * deg_K}; }
    std::string to_string() const;
};

struct EliminationResult {
    OreOperator S;     // free of K and k
    OreOperator A, B;  // cofactors
    OreOperator Rbar;  // A P + B Q = S + (K-1) Rbar
};

struct EliminationOutcome {
    std::optional<EliminationResult> result;
    EliminationBounds bounds_tried;
};

/// Bounded-degree ansatz search for the Modified Elimination Problem; the
/// bounds are doubled once before giving up when `retry` is true.
EliminationOutcome eliminate(const OreOperator& P, const OreOperator& Q,
                             const EliminationBounds& bounds = {}, bool retry = true);

/// Annihilators B(n,k) N - A(n,k) and D(n,k) K - C(n,k) from the shift
/// ratios of a term; the standard inputs to eliminate().
std::pair<OreOperator, OreOperator> annihilator_pair(const TermProduct& F);

OreOperator parse_ore_operator(const std::string& text);

}  // namespace hypersum

#pragma once

#include "hypersum/term.hpp"

namespace hypersum {

/// The triple with a(k)/a(k-1) = (p(k)/p(k-1)) (q(k)/r(k)) and
/// gcd(q(k), r(k+j)) = 1 for every integer j >= 0. Coefficients may involve
/// n, parameters, and (in the parameterized run) unknown symbols inside p.
struct GosperDecomposition {
    Polynomial p, q, r;
    Symbol var;
};

struct GosperResult {
    bool summable = false;
    /// Solution of the functional equation: a polynomial in the summation
    /// variable whose coefficients are rational in the spectator variables.
    RationalFunction f;
    TermProduct antidifference;  // T with T(k) - T(k-1) = t(k)
};

/// Turn the full ratio t(k)/t(k-1) into the (p, q, r) form, starting from
/// the given polynomial part and extracting shifted common factors by
/// ascending resultant root j.
GosperDecomposition decompose(const RationalFunction& rho, const Polynomial& initial_poly_part,
                              Symbol var);

/// The extraction loop on explicit (p, q, r); used directly by the
/// parameterized run where p carries unknown coefficients.
GosperDecomposition extract_shifted_gcds(Polynomial p, Polynomial q, Polynomial r, Symbol var);

/// Upper bound for deg f, including the leading-cancellation case; nullopt
/// when every candidate degree is negative.
std::optional<long> degree_bound(const GosperDecomposition& d);

/// Solve q(k+1) f(k) - r(k) f(k-1) = p(k) for f of degree <= L in the
/// summation variable (coefficients rational in the spectators).
std::optional<RationalFunction> solve_functional(const GosperDecomposition& d, long bound);

/// Gosper's decision procedure. Not-summable is a decision, not an error.
GosperResult gosper_sum(const TermProduct& t, Symbol var);

/// Candidate j >= 0 with gcd(q(k), r(k+j)) != 1, smallest first.
std::vector<long> nonnegative_shift_roots(const Polynomial& q, const Polynomial& r, Symbol var);

}  // namespace hypersum

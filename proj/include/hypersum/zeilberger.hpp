#pragma once

#include "hypersum/gosper.hpp"
#include "hypersum/ore.hpp"
#include "hypersum/term.hpp"

namespace hypersum {

/// S(N, n) = sum_i s_i(n) N^i with polynomial coefficients, s_I != 0,
/// jointly content-normalized.
struct RecurrenceOperator {
    Symbol recvar = Symbol::n();
    std::vector<Polynomial> coefficients;

    unsigned order() const { return coefficients.empty() ? 0 : static_cast<unsigned>(coefficients.size() - 1); }
    /// Clear rational content jointly and make the leading coefficient's
    /// leading term positive.
    void normalize();
    OreOperator to_ore() const;
    std::string to_string() const;

    bool operator==(const RecurrenceOperator&) const = default;
};

/// Recurrence plus rational certificate, forward convention:
///   S(N,n) F(n,k) = G(n,k+1) - G(n,k) with G = R F.
struct TelescopeCertificate {
    RecurrenceOperator op;
    RationalFunction certificate;
    Symbol sumvar = Symbol::k();
};

struct TelescopeOutcome {
    std::optional<TelescopeCertificate> certificate;
    unsigned max_order_tried = 0;

    bool found() const { return certificate.has_value(); }
};

/// The fast algorithm: parameterized Gosper over the summation variable,
/// solving for the f_j and the s_i jointly, order by order.
TelescopeOutcome creative_telescope(const TermProduct& F, unsigned max_order = 6,
                                    Symbol recvar = Symbol::n(), Symbol sumvar = Symbol::k());

/// Exact check of the telescoping identity
///   sum_i s_i(n) F(n+i,k)/F(n,k) = R(n,k+1) F(n,k+1)/F(n,k) - R(n,k).
bool verify_certificate(const TermProduct& F, const TelescopeCertificate& cert);

/// Closed form of a first-order recurrence: a(n) = initial * prod of the
/// step ratio -s0/s1 from n0. `closed_form` is false when some factor cannot
/// be expressed with integer-linear factorials (the product stays symbolic).
struct FirstOrderSolution {
    bool closed_form = false;
    TermProduct term;             // meaningful when closed_form
    RationalFunction step_ratio;  // a(n+1)/a(n) = -s0(n)/s1(n)
    Rational initial = 1;
    long n0 = 0;
};

FirstOrderSolution solve_first_order(const RecurrenceOperator& op, const Rational& initial,
                                     long n0 = 0);

}  // namespace hypersum

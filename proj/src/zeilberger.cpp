#include "hypersum/zeilberger.hpp"

#include "hypersum/linear_system.hpp"

#include <algorithm>

namespace hypersum {

void RecurrenceOperator::normalize() {
    while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
    if (coefficients.empty()) throw Error("zero recurrence operator");
    // Joint rational content, sign from the leading coefficient.
    Integer num(0), den(1);
    for (const auto& c : coefficients) {
        if (c.is_zero()) continue;
        Rational rc = c.rational_content();
        num = gcd(num, rc.get_num());
        den = lcm(den, rc.get_den());
    }
    Rational content(num, den);
    content.canonicalize();
    if (coefficients.back().leading_sign() < 0) content = -content;
    if (content != 1)
        for (auto& c : coefficients) c = c * (Rational(1) / content);
}

OreOperator RecurrenceOperator::to_ore() const {
    if (recvar != Symbol::n()) throw Error("to_ore: recurrence variable must be n");
    OreOperator op;
    for (size_t i = 0; i < coefficients.size(); ++i)
        op += OreOperator::monomial(RationalFunction(coefficients[i]), static_cast<unsigned>(i), 0);
    return op;
}

std::string RecurrenceOperator::to_string() const {
    std::string out;
    for (size_t i = coefficients.size(); i-- > 0;) {
        if (!out.empty()) out += " + ";
        out += "(" + coefficients[i].to_string() + ")";
        if (i > 0) {
            out += "*N";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial g = poly_gcd(a, b);
    return *(a * b).divide_exact(g);
}

struct OrderAttempt {
    RecurrenceOperator op;
    RationalFunction certificate;
};

std::optional<OrderAttempt> try_order(const TermProduct& F, unsigned order, Symbol recvar,
                                      Symbol sumvar) {
    // rho_i = F(n+i,k)/F(n,k); bring them over a common denominator.
    std::vector<RationalFunction> rho(order + 1);
    for (unsigned i = 0; i <= order; ++i) rho[i] = tp_ratio_power(F, recvar, i);
    Polynomial D(Rational(1));
    for (const auto& r : rho) D = poly_lcm(D, r.den());
    std::vector<Polynomial> N(order + 1);
    for (unsigned i = 0; i <= order; ++i)
        N[i] = rho[i].num() * *D.divide_exact(rho[i].den());

    // U(k) = sum s_i N_i(n,k), linear in the unknown s_i.
    std::vector<Symbol> s_syms;
    Polynomial U;
    for (unsigned i = 0; i <= order; ++i) {
        Symbol s = Symbol::intern("_s" + std::to_string(i));
        s_syms.push_back(s);
        U += Polynomial::variable(s) * N[i];
    }

    // Gosper data for H = (U/D) * F: the s-free part of the ratio
    // H(k)/H(k-1) is q/r; U * (polynomial parts) is the parametric p.
    const Polynomial& Mn = F.multiplier.num();
    const Polynomial& Md = F.multiplier.den();
    const Polynomial& P = F.base.polynomial_part();
    RationalFunction base_pure_ratio =
        (F.base.ratio(sumvar) / RationalFunction(P.shift(sumvar, 1), P)).shift(sumvar, -1);
    RationalFunction qr = RationalFunction(D.shift(sumvar, -1), D) *
                          RationalFunction(Md.shift(sumvar, -1), Md) * base_pure_ratio;

    GosperDecomposition d =
        extract_shifted_gcds(Mn * P, qr.num(), qr.den(), sumvar);
    Polynomial C = d.p;  // s-free part of p
    d.p = U * C;

    auto bound = degree_bound(d);
    if (!bound) return std::nullopt;

    std::vector<Symbol> unknowns;
    Polynomial f;
    for (long i = 0; i <= *bound; ++i) {
        Symbol fi = Symbol::intern("_f" + std::to_string(i));
        unknowns.push_back(fi);
        f += Polynomial::variable(fi) *
             Polynomial::monomial(Rational(1), Monomial::variable(sumvar, static_cast<unsigned>(i)));
    }
    size_t f_count = unknowns.size();
    for (Symbol s : s_syms) unknowns.push_back(s);

    Polynomial residual = d.q.shift(sumvar, 1) * f - d.r * f.shift(sumvar, -1) - d.p;
    auto system = extract_linear_system({residual}, unknowns, {sumvar});
    LinearSolution sol = solve_linear(system.matrix, system.rhs);
    if (!sol.solvable()) return std::nullopt;

    // Pick the nullspace vector with a nonzero s part of minimal order.
    const std::vector<RationalFunction>* best = nullptr;
    long best_order = -1;
    for (const auto& v : sol.nullspace) {
        long ord = -1;
        for (size_t i = 0; i <= order; ++i)
            if (!v[f_count + i].is_zero()) ord = static_cast<long>(i);
        if (ord < 0) continue;
        if (!best || ord < best_order) {
            best = &v;
            best_order = ord;
        }
    }
    if (!best) return std::nullopt;

    // Clear denominators and joint content from the s_i; scale the f_j along.
    std::vector<RationalFunction> s_vals(best->begin() + f_count, best->end());
    s_vals.resize(static_cast<size_t>(best_order) + 1);
    Polynomial lambda(Rational(1));
    for (const auto& sv : s_vals) lambda = poly_lcm(lambda, sv.den());
    std::vector<Polynomial> s_polys;
    for (const auto& sv : s_vals) {
        RationalFunction scaled = sv * RationalFunction(lambda);
        if (!scaled.is_polynomial()) throw Error("creative_telescope: denominator clearing failed");
        s_polys.push_back(scaled.num() * (Rational(1) / scaled.den().constant_value()));
    }
    RecurrenceOperator op{recvar, s_polys};
    op.normalize();
    // The achieved overall scale, applied to the f_j as well.
    RationalFunction tau;
    for (size_t i = 0; i < s_polys.size(); ++i)
        if (!s_vals[i].is_zero()) {
            tau = RationalFunction(op.coefficients[i]) / s_vals[i];
            break;
        }

    RationalFunction f_val;
    for (size_t i = 0; i < f_count; ++i)
        f_val += (*best)[i] * RationalFunction(Polynomial::monomial(
                     Rational(1), Monomial::variable(sumvar, static_cast<unsigned>(i))));
    f_val *= tau;

    // R(n,k) = q(k) f(k-1) / (D(k-1) C(k-1) * F(k)/F(k-1)); the parametric
    // U(k-1) cancels between H(k-1) and p(k-1).
    RationalFunction rho_k = F.ratio(sumvar).shift(sumvar, -1);
    RationalFunction R = RationalFunction(d.q) * f_val.shift(sumvar, -1) /
                         (RationalFunction(D.shift(sumvar, -1)) *
                          RationalFunction(C.shift(sumvar, -1)) * rho_k);

    return OrderAttempt{op, R};
}

}  // namespace

TelescopeOutcome creative_telescope(const TermProduct& F, unsigned max_order, Symbol recvar,
                                    Symbol sumvar) {
    TelescopeOutcome outcome;
    outcome.max_order_tried = max_order;
    for (unsigned order = 0; order <= max_order; ++order) {
        auto attempt = try_order(F, order, recvar, sumvar);
        if (!attempt) continue;
        TelescopeCertificate cert{attempt->op, attempt->certificate, sumvar};
        if (!verify_certificate(F, cert))
            throw Error("creative_telescope: certificate failed symbolic verification");
        outcome.certificate = std::move(cert);
        return outcome;
    }
    return outcome;
}

bool verify_certificate(const TermProduct& F, const TelescopeCertificate& cert) {
    RationalFunction lhs;
    for (size_t i = 0; i < cert.op.coefficients.size(); ++i)
        lhs += RationalFunction(cert.op.coefficients[i]) *
               tp_ratio_power(F, cert.op.recvar, static_cast<unsigned>(i));
    RationalFunction rhs =
        cert.certificate.shift(cert.sumvar, 1) * F.ratio(cert.sumvar) - cert.certificate;
    return (lhs - rhs).is_zero();
}

// ------------------------------------------------------- first-order solve

namespace {

struct LinearFactors {
    bool complete = true;
    Rational constant = 1;
    // Parameter-only polynomial factors and var-linear factors, with signed
    // multiplicities (negative = denominator).
    std::vector<std::pair<Polynomial, long>> param_factors;
    std::vector<std::pair<LinearForm, long>> linear_factors;
};

void factor_side(Polynomial p, Symbol var, long mult, LinearFactors& out) {
    if (p.is_zero()) throw Error("factor_side: zero polynomial");
    Rational content = p.rational_content();
    if (p.leading_sign() < 0) content = -content;
    out.constant *= pow_rational(content, mult);
    p = p * (Rational(1) / content);
    if (p.is_constant()) return;

    if (!p.contains(var)) {
        out.param_factors.emplace_back(p, mult);
        return;
    }

    std::vector<Symbol> params;
    for (Symbol s : p.variables())
        if (s != var) params.push_back(s);

    if (params.empty()) {
        // Integer roots, then half-integer roots (factors 2 var - t).
        bool progress = true;
        while (progress && p.degree(var) > 0) {
            progress = false;
            for (const Integer& root : integer_roots(p)) {
                Polynomial factor = Polynomial::variable(var) - Polynomial(Rational(root));
                while (auto q = p.divide_exact(factor)) {
                    auto lf = LinearForm::from_polynomial(factor);
                    out.linear_factors.emplace_back(*lf, mult);
                    p = *q;
                    progress = true;
                }
                if (p.degree(var) == 0) break;
            }
            if (p.degree(var) == 0) break;
            Polynomial half = p.substitute(var, Polynomial::variable(var) * Rational(1, 2));
            for (const Integer& t : integer_roots(half)) {
                Polynomial factor =
                    Polynomial::variable(var) * Rational(2) - Polynomial(Rational(t));
                while (auto q = p.divide_exact(factor)) {
                    auto lf = LinearForm::from_polynomial(factor);
                    out.linear_factors.emplace_back(*lf, mult);
                    p = *q;
                    progress = true;
                }
                if (p.degree(var) == 0) break;
            }
        }
    } else if (params.size() <= 3) {
        // Bounded search for integer-linear factors over the parameters,
        // with a cheap evaluation prefilter before the exact division.
        std::map<Symbol, Rational> probe;
        long primes[3] = {97, 89, 83};
        for (size_t i = 0; i < params.size(); ++i) probe[params[i]] = Rational(primes[i]);
        auto probe_at = [&](const Polynomial& poly, long v) {
            auto pt = probe;
            pt[var] = Rational(v);
            return poly.evaluate(pt);
        };
        bool progress = true;
        while (progress && p.degree(var) > 0) {
            progress = false;
            Rational pv1 = probe_at(p, 41), pv2 = probe_at(p, 43);
            for (long alpha = 1; alpha <= 2 && !progress; ++alpha) {
                std::vector<std::vector<long>> betas{{}};
                for (size_t i = 0; i < params.size(); ++i) {
                    std::vector<std::vector<long>> next;
                    for (const auto& prefix : betas)
                        for (long b = -3; b <= 3; ++b) {
                            auto ext = prefix;
                            ext.push_back(b);
                            next.push_back(std::move(ext));
                        }
                    betas = std::move(next);
                }
                for (const auto& beta : betas) {
                    for (long gamma = -12; gamma <= 12 && !progress; ++gamma) {
                        LinearForm cand = LinearForm::variable(var, alpha) + LinearForm(gamma);
                        for (size_t i = 0; i < params.size(); ++i)
                            cand += LinearForm::variable(params[i], beta[i]);
                        Polynomial cp = cand.to_polynomial();
                        Rational c1 = probe_at(cp, 41), c2 = probe_at(cp, 43);
                        if (c1 == 0 || c2 == 0) continue;
                        if (pv1 != 0 && !is_integer(pv1 / c1)) continue;
                        if (pv2 != 0 && !is_integer(pv2 / c2)) continue;
                        if (auto q = p.divide_exact(cp)) {
                            out.linear_factors.emplace_back(cand, mult);
                            p = *q;
                            progress = true;
                        }
                    }
                    if (progress) break;
                }
            }
        }
    }

    if (!p.is_constant()) {
        if (!p.contains(var)) {
            out.param_factors.emplace_back(p, mult);
        } else {
            out.complete = false;
        }
        return;
    }
    out.constant *= pow_rational(p.constant_value(), mult);
}

// t *= prod_{m=n0}^{var-1} ell(m)^mult for a var-linear ell.
bool multiply_rising_product(HypergeometricTerm& t, LinearForm ell, long mult, Symbol var,
                             long n0) {
    long long alpha = ell.coeff(var);
    LinearForm var_lf = LinearForm::variable(var);

    if (alpha < 0) {
        // prod (ell) = (-1)^(var-n0) prod (-ell)
        t.multiply_sign((var_lf - LinearForm(n0)) * mult);
        return multiply_rising_product(t, -ell, mult, var, n0);
    }
    if (alpha == 1) {
        LinearForm hi = ell - LinearForm(1);          // argument at m = var - 1
        LinearForm lo = hi - var_lf + LinearForm(n0);  // argument at m = n0 - 1
        if (!lo.is_constant() || lo.constant() >= 0) {
            t.multiply_factorial(hi, mult);
            t.multiply_factorial(lo, -mult);
            return true;
        }
        // Entirely negative start: flip to a falling product, which carries
        // the correct compact support (zero once the factors cross zero).
        t.multiply_sign((var_lf - LinearForm(n0)) * mult);
        long long c2 = (-ell + var_lf).constant();  // prod (c2 - m)
        // prod_{m=n0}^{var-1} (c2 - m) = (c2 - n0)! / (c2 - var)!
        t.multiply_factorial(LinearForm(c2 - n0), mult);
        t.multiply_factorial(LinearForm(c2) - var_lf, -mult);
        return true;
    }
    if (alpha == 2) {
        LinearForm beta_lf = ell - var_lf * 2;
        if (!beta_lf.is_constant()) return false;
        long long beta = beta_lf.constant();
        if (beta % 2 == 0) {
            // 2m + beta = 2 (m + beta/2)
            t.multiply_power(Polynomial(Rational(2)), (var_lf - LinearForm(n0)) * mult);
            return multiply_rising_product(t, var_lf + LinearForm(beta / 2), mult, var, n0);
        }
        long long tt = (beta - 1) / 2;
        if (tt < 0) return false;
        // prod_{m=0}^{x-1} (2m + beta) = (2x+beta-1)! t! / ((x+t)! (2t)! 2^x)
        t.multiply_factorial(var_lf * 2 + LinearForm(beta - 1), mult);
        t.multiply_factorial(var_lf + LinearForm(tt), -mult);
        t.multiply_power(Polynomial(Rational(2)), var_lf * (-mult));
        Rational c = Rational(factorial(Integer(tt))) / Rational(factorial(Integer(2 * tt)));
        t.multiply_constant(pow_rational(c, mult));
        // Divide by the same expression at var = n0, computed directly.
        Rational k0(1);
        if (n0 >= 0) {
            for (long m = 0; m < n0; ++m) {
                long long v = 2 * m + beta;
                if (v == 0) return false;
                k0 *= Rational(v);
            }
        } else {
            for (long m = n0; m < 0; ++m) {
                long long v = 2 * m + beta;
                if (v == 0) return false;
                k0 /= Rational(v);
            }
        }
        t.multiply_constant(pow_rational(k0, -mult));
        return true;
    }
    return false;
}

}  // namespace

FirstOrderSolution solve_first_order(const RecurrenceOperator& op, const Rational& initial,
                                     long n0) {
    if (op.order() != 1) throw Error("solve_first_order: operator order must be 1");
    const Polynomial& s0 = op.coefficients[0];
    const Polynomial& s1 = op.coefficients[1];
    if (s1.is_zero()) throw Error("solve_first_order: zero leading coefficient");
    Symbol var = op.recvar;

    // Degenerate forward recurrence: s1 vanishing at an integer >= n0.
    std::vector<Symbol> s1_vars = s1.variables();
    if (s1_vars.size() == 1 && s1_vars[0] == var) {
        for (const Integer& root : integer_roots(s1))
            if (root >= n0)
                throw Error("solve_first_order: leading coefficient vanishes at " +
                            var.name() + " = " + to_string(root));
    }

    FirstOrderSolution sol;
    sol.step_ratio = -RationalFunction(s0) / RationalFunction(s1);
    sol.initial = initial;
    sol.n0 = n0;

    LinearFactors factors;
    factor_side(-s0, var, 1, factors);
    factor_side(s1, var, -1, factors);
    if (!factors.complete) return sol;

    HypergeometricTerm t;
    t.multiply_constant(initial);
    LinearForm exp_nn0 = LinearForm::variable(var) - LinearForm(n0);
    if (factors.constant != 1) t.multiply_power(Polynomial(factors.constant), exp_nn0);
    for (const auto& [poly, mult] : factors.param_factors)
        t.multiply_power(poly, exp_nn0 * mult);
    for (const auto& [lf, mult] : factors.linear_factors)
        if (!multiply_rising_product(t, lf, mult, var, n0)) return sol;

    sol.closed_form = true;
    sol.term = TermProduct{RationalFunction(1L), t};
    return sol;
}

}  // namespace hypersum

#include "hypersum/gosper.hpp"

#include "hypersum/linear_system.hpp"

#include <algorithm>

namespace hypersum {

std::vector<long> nonnegative_shift_roots(const Polynomial& q, const Polynomial& r, Symbol var) {
    if (q.degree(var) <= 0 || r.degree(var) <= 0) return {};
    Symbol j = Symbol::intern("_shift");
    Polynomial r_shifted = r.substitute(var, Polynomial::variable(var) + Polynomial::variable(j));
    Polynomial res = resultant(q, r_shifted, var);
    if (res.is_zero()) throw Error("vanishing resultant: q and r share a factor");

    // A shift j0 works only if res(j0) == 0 identically in the spectator
    // variables, so candidates are integer roots of any one coefficient.
    std::vector<Symbol> others;
    for (Symbol s : res.variables())
        if (s != j) others.push_back(s);
    Polynomial candidate_poly;
    for (const auto& [mono, part] : res.split_by(others)) {
        if (!part.is_zero()) {
            candidate_poly = part;
            break;
        }
    }
    std::vector<long> roots;
    if (candidate_poly.is_constant()) return roots;
    for (const Integer& root : integer_roots(candidate_poly)) {
        if (root < 0) continue;
        auto rl = to_long(root);
        if (!rl) continue;
        if (res.substitute(j, Polynomial(Rational(root))).is_zero()) roots.push_back(*rl);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

GosperDecomposition extract_shifted_gcds(Polynomial p, Polynomial q, Polynomial r, Symbol var) {
    for (;;) {
        auto roots = nonnegative_shift_roots(q, r, var);
        if (roots.empty()) break;
        long j = roots.front();
        Polynomial g = poly_gcd(q, r.shift(var, j));
        if (g.is_constant()) throw Error("decompose: expected a nontrivial shifted gcd");
        q = *q.divide_exact(g);
        r = *r.divide_exact(g.shift(var, -j));
        for (long i = 0; i < j; ++i) p *= g.shift(var, -i);
    }
    return GosperDecomposition{p, q, r, var};
}

GosperDecomposition decompose(const RationalFunction& rho, const Polynomial& initial_poly_part,
                              Symbol var) {
    if (rho.is_zero()) throw Error("decompose: zero ratio");
    if (initial_poly_part.is_zero()) throw Error("decompose: zero polynomial part");

    Polynomial p = initial_poly_part;
    RationalFunction qr = rho * RationalFunction(p.shift(var, -1), p);
    return extract_shifted_gcds(p, qr.num(), qr.den(), var);
}

std::optional<long> degree_bound(const GosperDecomposition& d) {
    Symbol var = d.var;
    Polynomial q1 = d.q.shift(var, 1);
    Polynomial sigma = q1 + d.r;
    Polynomial delta = q1 - d.r;
    long deg_sigma = sigma.degree(var);
    long deg_delta = delta.degree(var);
    long deg_p = d.p.degree(var);

    long bound;
    if (deg_delta >= deg_sigma) {
        bound = deg_p - deg_delta;
    } else {
        long ell = deg_sigma;
        bound = deg_p - ell + 1;
        // The "fluke": the top coefficients may cancel for one particular
        // higher degree u = -2 delta_(ell-1) / sigma_ell.
        RationalFunction dtop = ell >= 1
                                    ? RationalFunction(delta.coefficient_of(var, static_cast<unsigned>(ell - 1)))
                                    : RationalFunction();
        RationalFunction u = RationalFunction(Rational(-2)) * dtop /
                             RationalFunction(sigma.coefficient_of(var, static_cast<unsigned>(ell)));
        if (u.is_constant()) {
            Rational uv = u.constant_value();
            if (is_integer(uv) && uv >= 0) {
                auto ul = to_long(uv);
                if (ul) bound = std::max(bound, *ul);
            }
        }
    }
    if (bound < 0) return std::nullopt;
    return bound;
}

std::optional<RationalFunction> solve_functional(const GosperDecomposition& d, long bound) {
    if (bound < 0) return std::nullopt;
    Symbol var = d.var;
    std::vector<Symbol> unknowns;
    Polynomial f;
    for (long i = 0; i <= bound; ++i) {
        Symbol fi = Symbol::intern("_f" + std::to_string(i));
        unknowns.push_back(fi);
        f += Polynomial::variable(fi) *
             Polynomial::monomial(Rational(1), Monomial::variable(var, static_cast<unsigned>(i)));
    }
    Polynomial residual = d.q.shift(var, 1) * f - d.r * f.shift(var, -1) - d.p;
    auto system = extract_linear_system({residual}, unknowns, {var});
    LinearSolution sol = solve_linear(system.matrix, system.rhs);
    if (!sol.solvable()) return std::nullopt;

    RationalFunction result;
    for (size_t i = 0; i < unknowns.size(); ++i)
        result += sol.particular[i] *
                  RationalFunction(Polynomial::monomial(Rational(1), Monomial::variable(var, static_cast<unsigned>(i))));
    return result;
}

GosperResult gosper_sum(const TermProduct& t, Symbol var) {
    GosperResult result;
    RationalFunction rho = t.ratio(var).shift(var, -1);  // t(k)/t(k-1)

    Polynomial initial_poly = t.base.polynomial_part() * t.multiplier.num();
    GosperDecomposition d = decompose(rho, initial_poly, var);

    auto bound = degree_bound(d);
    if (!bound) return result;
    auto f = solve_functional(d, *bound);
    if (!f) return result;

    // T = t * q(k+1) f(k) / p(k); check T(k) - T(k-1) = t(k) before returning.
    RationalFunction w = RationalFunction(d.q.shift(var, 1)) * *f / RationalFunction(d.p);
    RationalFunction check = w - w.shift(var, -1) / rho;
    if (!(check == RationalFunction(1L)))
        throw Error("gosper_sum: antidifference failed symbolic verification");

    result.summable = true;
    result.f = *f;
    result.antidifference = TermProduct{t.multiplier * w, t.base};
    return result;
}

}  // namespace hypersum

#include "hypersum/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hypersum {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(Symbol s, unsigned e) {
    Monomial m;
    if (e > 0) m.factors_.emplace_back(s, e);
    return m;
}

unsigned Monomial::degree(Symbol s) const {
    for (const auto& [sym, e] : factors_)
        if (sym == s) return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [sym, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    for (const auto& [sym, e] : o.factors_) {
        while (a != factors_.end() && a->first < sym) r.factors_.push_back(*a++);
        if (a == factors_.end() || a->first != sym || a->second < e) return std::nullopt;
        if (a->second > e) r.factors_.emplace_back(sym, a->second - e);
        ++a;
    }
    while (a != factors_.end()) r.factors_.push_back(*a++);
    return r;
}

Monomial Monomial::restricted(const std::vector<Symbol>& vars, bool keep) const {
    Monomial r;
    for (const auto& f : factors_) {
        bool in = std::find(vars.begin(), vars.end(), f.first) != vars.end();
        if (in == keep) r.factors_.push_back(f);
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    unsigned da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    // Lexicographic with earlier symbols more significant: higher exponent on
    // an earlier symbol means a *larger* monomial.
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first != b->first) return a->first > b->first;
        if (a->second != b->second) return a->second < b->second;
        ++a, ++b;
    }
    return a == factors_.end() && b != o.factors_.end();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::variable(Symbol s) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(s), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) it->second += c;
    }
    prune();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) it->second -= c;
    }
    prune();
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto [it, fresh] = r.terms_.emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.prune();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Rational(1));
    Polynomial base(*this);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

long Polynomial::degree(Symbol s) const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.degree(s)));
    return d;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.total_degree()));
    return d;
}

bool Polynomial::contains(Symbol s) const {
    for (const auto& [m, c] : terms_)
        if (m.degree(s) > 0) return true;
    return false;
}

std::vector<Symbol> Polynomial::variables() const {
    std::vector<Symbol> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors())
            if (std::find(vars.begin(), vars.end(), s) == vars.end()) vars.push_back(s);
    std::sort(vars.begin(), vars.end());
    return vars;
}

Polynomial Polynomial::coefficient_of(Symbol s, unsigned power) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.degree(s) != power) continue;
        Monomial rest = m.restricted({s}, false);
        auto [it, fresh] = r.terms_.emplace(rest, c);
        if (!fresh) it->second += c;
    }
    r.prune();
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
    long d = degree(s);
    std::vector<Polynomial> cs(static_cast<size_t>(d + 1));
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree(s);
        Monomial rest = m.restricted({s}, false);
        auto [it, fresh] = cs[e].terms_.emplace(rest, c);
        if (!fresh) it->second += c;
    }
    for (auto& p : cs) p.prune();
    return cs;
}

Polynomial Polynomial::from_coefficients(Symbol s, const std::vector<Polynomial>& cs) {
    Polynomial r;
    for (size_t e = 0; e < cs.size(); ++e) {
        Polynomial pe = cs[e];
        if (e > 0) pe *= Polynomial::monomial(Rational(1), Monomial::variable(s, static_cast<unsigned>(e)));
        r += pe;
    }
    return r;
}

Polynomial Polynomial::leading_coefficient(Symbol s) const {
    long d = degree(s);
    if (d < 0) return Polynomial();
    return coefficient_of(s, static_cast<unsigned>(d));
}

std::map<Monomial, Polynomial> Polynomial::split_by(const std::vector<Symbol>& vars) const {
    std::map<Monomial, Polynomial> groups;
    for (const auto& [m, c] : terms_) {
        Monomial outer = m.restricted(vars, true);
        Monomial inner = m.restricted(vars, false);
        groups[outer] += Polynomial::monomial(c, inner);
    }
    return groups;
}

Polynomial Polynomial::substitute(Symbol s, const Polynomial& value) const {
    if (!contains(s)) return *this;
    auto cs = coefficients_in(s);
    // Horner
    Polynomial r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + *it;
    return r;
}

Polynomial Polynomial::substitute_all(const std::map<Symbol, Polynomial>& images) const {
    std::vector<Symbol> mapped;
    for (const auto& [s, img] : images) mapped.push_back(s);
    Polynomial out;
    for (const auto& [mono, part] : split_by(mapped)) {
        Polynomial piece = part;
        for (const auto& [s, e] : mono.factors()) piece *= images.at(s).pow(e);
        out += piece;
    }
    return out;
}

Polynomial Polynomial::shift(Symbol s, long amount) const {
    if (amount == 0) return *this;
    return substitute(s, Polynomial::variable(s) + Polynomial(Rational(amount)));
}

Rational Polynomial::evaluate(const std::map<Symbol, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [s, e] : m.factors()) {
            auto it = assignment.find(s);
            if (it == assignment.end()) throw Error("evaluate: unassigned variable " + s.name());
            v *= pow_rational(it->second, static_cast<long>(e));
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute_values(const std::map<Symbol, Rational>& assignment) const {
    Polynomial r = *this;
    for (const auto& [s, v] : assignment)
        if (r.contains(s)) r = r.substitute(s, Polynomial(v));
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return Polynomial();
    if (o.is_constant()) return *this * (Rational(1) / o.constant_value());
    Polynomial rem(*this), quot;
    const Monomial& lmo = o.leading_monomial();
    const Rational& lco = o.leading_rational();
    while (!rem.is_zero()) {
        auto m = rem.leading_monomial().divide(lmo);
        if (!m) return std::nullopt;
        Polynomial t = Polynomial::monomial(rem.leading_rational() / lco, *m);
        quot += t;
        rem -= t * o;
    }
    return quot;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_rational() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer num(0), den(1);
    for (const auto& [m, c] : terms_) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    Rational content(num, den);
    content.canonicalize();
    return content;
}

int Polynomial::leading_sign() const {
    if (terms_.empty()) return 0;
    return leading_rational() > 0 ? 1 : -1;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    if (leading_sign() < 0) c = -c;
    return *this * (Rational(1) / c);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending canonical order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool wrote_coeff = false;
        if (a != 1 || m.is_one()) {
            out << to_string(a);
            wrote_coeff = true;
        }
        bool first_var = true;
        for (const auto& [s, e] : m.factors()) {
            if (wrote_coeff || !first_var) out << "*";
            out << s.name();
            if (e > 1) out << "^" << e;
            first_var = false;
        }
    }
    return out.str();
}

// ------------------------------------------------------------ gcd and PRS

namespace {

// lc(q)^(deg p - deg q + 1) * p = Q*q + R; returns R.
Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q, Symbol var) {
    long dq = q.degree(var);
    if (dq < 0) throw Error("pseudo-division by zero");
    Polynomial lcq = q.leading_coefficient(var);
    Polynomial rem = p;
    long dr = rem.degree(var);
    long steps = dr - dq + 1;
    while (!rem.is_zero() && (dr = rem.degree(var)) >= dq) {
        Polynomial lcr = rem.leading_coefficient(var);
        Polynomial shift_mono =
            Polynomial::monomial(Rational(1), Monomial::variable(var, static_cast<unsigned>(dr - dq)));
        rem = rem * lcq - q * (lcr * shift_mono);
        --steps;
    }
    // Keep the classic power so callers relying on the exact multiplier work.
    for (; steps > 0; --steps) rem *= lcq;
    return rem;
}

// Content of p viewed in Q[rest][var]: gcd of the coefficient polynomials.
Polynomial content_wrt(const Polynomial& p, Symbol var) {
    Polynomial c;
    for (const auto& coeff : p.coefficients_in(var)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c.is_zero() ? Polynomial(Rational(1)) : c;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));

    // Main variable: the earliest symbol present in either operand.
    std::vector<Symbol> vars = a.variables();
    for (Symbol s : b.variables())
        if (std::find(vars.begin(), vars.end(), s) == vars.end()) vars.push_back(s);
    std::sort(vars.begin(), vars.end());
    Symbol var = vars.front();

    if (!a.contains(var)) return poly_gcd(content_wrt(b, var), a);
    if (!b.contains(var)) return poly_gcd(content_wrt(a, var), b);

    Polynomial ca = content_wrt(a, var), cb = content_wrt(b, var);
    Polynomial pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    Polynomial cont = poly_gcd(ca, cb);

    // Primitive PRS.
    Polynomial r0 = pa, r1 = pb;
    if (r0.degree(var) < r1.degree(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Polynomial rem = pseudo_remainder(r0, r1, var);
        if (!rem.is_zero()) {
            Polynomial c = content_wrt(rem, var);
            rem = rem.divide_exact(c).value().normalized();
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    if (r0.degree(var) <= 0) return cont.normalized();
    Polynomial pp = r0.divide_exact(content_wrt(r0, var)).value();
    return (cont * pp).normalized();
}

// ------------------------------------------------------------- resultant

namespace {

// Fraction-free determinant of a square polynomial matrix (Bareiss).
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
    size_t nrows = m.size();
    if (nrows == 0) return Polynomial(Rational(1));
    int sign = 1;
    Polynomial prev_pivot(Rational(1));
    for (size_t p = 0; p + 1 < nrows; ++p) {
        size_t pivot_row = p;
        while (pivot_row < nrows && m[pivot_row][p].is_zero()) ++pivot_row;
        if (pivot_row == nrows) return Polynomial();
        if (pivot_row != p) {
            std::swap(m[pivot_row], m[p]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < nrows; ++i) {
            for (size_t j = p + 1; j < nrows; ++j) {
                Polynomial t = m[p][p] * m[i][j] - m[i][p] * m[p][j];
                m[i][j] = t.divide_exact(prev_pivot).value();
            }
            m[i][p] = Polynomial();
        }
        prev_pivot = m[p][p];
    }
    Polynomial det = m[nrows - 1][nrows - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, Symbol var) {
    if (p.is_zero() && q.is_zero()) throw Error("undefined resultant");
    long dp = p.degree(var), dq = q.degree(var);
    if (p.is_zero() || q.is_zero()) return Polynomial();
    if (dp <= 0 && dq <= 0) return Polynomial(Rational(1));
    if (dp <= 0) return p.pow(static_cast<unsigned>(dq));
    if (dq <= 0) return q.pow(static_cast<unsigned>(dp));

    auto pc = p.coefficients_in(var);
    auto qc = q.coefficients_in(var);
    size_t size = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Polynomial>> m(size, std::vector<Polynomial>(size));
    for (long row = 0; row < dq; ++row)
        for (long j = 0; j <= dp; ++j) m[row][row + j] = pc[static_cast<size_t>(dp - j)];
    for (long row = 0; row < dp; ++row)
        for (long j = 0; j <= dq; ++j) m[dq + row][row + j] = qc[static_cast<size_t>(dq - j)];
    return bareiss_determinant(std::move(m));
}

// ----------------------------------------------------------- integer roots

std::vector<Integer> integer_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error("infinitely many roots");
    auto vars = p.variables();
    if (vars.size() > 1) throw Error("integer_roots: polynomial is not univariate");
    if (vars.empty()) return {};
    Symbol var = vars.front();

    // Clear denominators.
    Integer den(1);
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
    std::vector<Integer> coeffs(static_cast<size_t>(p.degree(var)) + 1, Integer(0));
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den);
        coeffs[m.degree(var)] = scaled.get_num();
    }

    std::vector<Integer> roots;
    size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) roots.push_back(Integer(0));

    auto value_at = [&](const Integer& x) {
        Integer acc(0);
        for (size_t i = coeffs.size(); i-- > low;) acc = acc * x + coeffs[i];
        return acc;
    };

    Integer trailing = coeffs[low];
    Integer leading = coeffs.back();
    // Cauchy-style bound: every root satisfies |r| <= 1 + max|a_i| / |a_d|.
    Integer maxc(0);
    for (size_t i = low; i < coeffs.size(); ++i) {
        Integer a = abs(coeffs[i]);
        if (a > maxc) maxc = a;
    }
    Integer bound = 1 + maxc / abs(leading) + 1;

    Integer t = abs(trailing);
    auto try_root = [&](const Integer& d) {
        if (value_at(d) == 0) roots.push_back(d);
        Integer nd = -d;
        if (value_at(nd) == 0) roots.push_back(nd);
    };
    for (Integer i(1); i * i <= t && i <= bound; ++i) {
        if (t % i != 0) continue;
        try_root(i);
        Integer other = t / i;
        if (other != i && other <= bound) try_root(other);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace hypersum

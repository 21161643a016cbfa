#include "hypersum/term.hpp"

#include <algorithm>
#include <sstream>

namespace hypersum {

std::map<Symbol, Rational> to_rational_point(const EvalPoint& point) {
    std::map<Symbol, Rational> r;
    for (const auto& [s, v] : point) r.emplace(s, Rational(v));
    return r;
}

HypergeometricTerm HypergeometricTerm::one() { return HypergeometricTerm(); }

void HypergeometricTerm::multiply_constant(const Rational& c) {
    if (c == 0) throw Error("zero constant in hypergeometric term");
    if (c < 0) {
        sign_exponent_ = (sign_exponent_ + LinearForm(1)).reduced_mod2();
        constant_ *= -c;
    } else {
        constant_ *= c;
    }
}

void HypergeometricTerm::multiply_sign(const LinearForm& exponent) {
    sign_exponent_ = (sign_exponent_ + exponent).reduced_mod2();
}

void HypergeometricTerm::multiply_power(const Polynomial& base, const LinearForm& exponent) {
    if (base.is_zero()) throw Error("zero power base");
    if (exponent.is_zero()) return;
    if (base.contains(Symbol::n()) || base.contains(Symbol::k()))
        throw Error("power base must not involve n or k");

    if (base.is_constant()) {
        Rational c = base.constant_value();
        if (c < 0) {
            multiply_sign(exponent);
            c = -c;
        }
        if (c == 1) return;
        if (exponent.is_constant()) {
            multiply_constant(pow_rational(c, exponent.constant()));
            return;
        }
        // Canonical rational base is > 1.
        LinearForm e = exponent;
        if (c < 1) {
            c = Rational(1) / c;
            e = -e;
        }
        powers_.push_back({Polynomial(c), e});
        normalize();
        return;
    }

    // Split sign and rational content out of a polynomial base.
    Polynomial b = base;
    if (b.leading_sign() < 0) {
        multiply_sign(exponent);
        b = -b;
    }
    Rational content = b.rational_content();
    if (content != 1) {
        b = b * (Rational(1) / content);
        multiply_power(Polynomial(content), exponent);
    }
    if (exponent.is_constant() && exponent.constant() >= 0) {
        multiply_polynomial(b.pow(static_cast<unsigned>(exponent.constant())));
        return;
    }
    powers_.push_back({b, exponent});
    normalize();
}

void HypergeometricTerm::multiply_polynomial(const Polynomial& p) {
    if (p.is_zero()) throw Error("zero polynomial part");
    polynomial_part_ *= p;
    normalize();
}

void HypergeometricTerm::multiply_factorial(const LinearForm& argument, long exponent,
                                            bool shadowed) {
    if (exponent == 0) return;
    factorials_.push_back({argument, exponent, shadowed});
    normalize();
}

void HypergeometricTerm::multiply_term(const HypergeometricTerm& o) {
    multiply_constant(o.constant_);
    multiply_sign(o.sign_exponent_);
    for (const auto& p : o.powers_) powers_.push_back(p);
    polynomial_part_ *= o.polynomial_part_;
    for (const auto& f : o.factorials_) factorials_.push_back(f);
    normalize();
}

HypergeometricTerm HypergeometricTerm::operator*(const HypergeometricTerm& o) const {
    HypergeometricTerm r(*this);
    r.multiply_term(o);
    return r;
}

HypergeometricTerm HypergeometricTerm::inverse() const {
    if (!polynomial_part_.is_constant())
        throw Error("cannot invert a term with a non-constant polynomial part");
    HypergeometricTerm r;
    r.constant_ = Rational(1) / (constant_ * polynomial_part_.constant_value());
    if (r.constant_ < 0) {
        r.constant_ = -r.constant_;
        r.sign_exponent_ = LinearForm(1);
    }
    r.sign_exponent_ = (r.sign_exponent_ + sign_exponent_).reduced_mod2();
    for (const auto& p : powers_) r.powers_.push_back({p.base, -p.exponent});
    for (const auto& f : factorials_) r.factorials_.push_back({f.argument, -f.exponent, f.shadowed});
    r.normalize();
    return r;
}

void HypergeometricTerm::normalize() {
    // Polynomial part: rational content moves into the constant.
    if (polynomial_part_.is_zero()) throw Error("zero polynomial part");
    Rational content = polynomial_part_.rational_content();
    if (polynomial_part_.leading_sign() < 0) content = -content;
    if (content != 1) {
        polynomial_part_ = polynomial_part_ * (Rational(1) / content);
        multiply_constant(content);
    }

    sign_exponent_ = sign_exponent_.reduced_mod2();

    // Merge power factors with equal bases.
    std::map<Polynomial, LinearForm, std::less<Polynomial>> merged_powers;
    auto poly_less = [](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); };
    std::vector<PowerFactor> ps = std::move(powers_);
    powers_.clear();
    std::sort(ps.begin(), ps.end(),
              [&](const PowerFactor& a, const PowerFactor& b) { return poly_less(a.base, b.base); });
    for (size_t i = 0; i < ps.size();) {
        Polynomial base = ps[i].base;
        LinearForm e = ps[i].exponent;
        size_t j = i + 1;
        while (j < ps.size() && ps[j].base == base) e += ps[j++].exponent;
        i = j;
        if (e.is_zero() || (base.is_constant() && base.constant_value() == 1)) continue;
        if (base.is_constant() && e.is_constant()) {
            multiply_constant(pow_rational(base.constant_value(), e.constant()));
            continue;
        }
        powers_.push_back({base, e});
    }

    // Merge factorial factors on (argument, shadowed).
    std::vector<FactorialFactor> fs = std::move(factorials_);
    factorials_.clear();
    std::sort(fs.begin(), fs.end(), [](const FactorialFactor& a, const FactorialFactor& b) {
        if (a.argument < b.argument) return true;
        if (b.argument < a.argument) return false;
        return a.shadowed < b.shadowed;
    });
    for (size_t i = 0; i < fs.size();) {
        FactorialFactor f = fs[i];
        size_t j = i + 1;
        while (j < fs.size() && fs[j].argument == f.argument && fs[j].shadowed == f.shadowed)
            f.exponent += fs[j++].exponent;
        i = j;
        if (f.exponent == 0) continue;
        // A constant factorial argument folds into the constant when the
        // value is defined; negative constants must stay symbolic.
        if (f.argument.is_constant() && f.argument.constant() >= 0) {
            Rational v(factorial(Integer(f.argument.constant())));
            multiply_constant(pow_rational(v, f.exponent));
            continue;
        }
        factorials_.push_back(f);
    }
}

bool HypergeometricTerm::depends_on(Symbol s) const {
    if (sign_exponent_.contains(s) || polynomial_part_.contains(s)) return true;
    for (const auto& p : powers_)
        if (p.exponent.contains(s) || p.base.contains(s)) return true;
    for (const auto& f : factorials_)
        if (f.argument.contains(s)) return true;
    return false;
}

RationalFunction HypergeometricTerm::ratio(Symbol var) const {
    RationalFunction r(1L);
    if (sign_exponent_.coeff(var) % 2 != 0) r = -r;
    for (const auto& p : powers_) {
        long long m = p.exponent.coeff(var);
        if (m == 0) continue;
        RationalFunction b{p.base};
        RationalFunction acc(1L);
        for (long long i = 0; i < (m < 0 ? -m : m); ++i) acc *= b;
        r = m > 0 ? r * acc : r / acc;
    }
    if (!polynomial_part_.is_constant())
        r *= RationalFunction(polynomial_part_.shift(var, 1), polynomial_part_);
    for (const auto& f : factorials_) {
        long long m = f.argument.coeff(var);
        if (m == 0) continue;
        Polynomial arg = f.argument.to_polynomial();
        Polynomial prod(Rational(1));
        if (m > 0) {
            // (L+m)!/L! = (L+1)...(L+m)
            for (long long j = 1; j <= m; ++j) prod *= arg + Polynomial(Rational(j));
        } else {
            // (L+m)!/L! = 1/[(L)(L-1)...(L+m+1)]
            for (long long j = 0; j < -m; ++j) prod *= arg - Polynomial(Rational(j));
        }
        long e = m > 0 ? f.exponent : -f.exponent;
        RationalFunction pr{prod};
        for (long i = 0; i < (e < 0 ? -e : e); ++i) r = e > 0 ? r * pr : r / pr;
    }
    return r;
}

RationalFunction HypergeometricTerm::ratio_power(Symbol var, unsigned steps) const {
    RationalFunction one_step = ratio(var);
    RationalFunction r(1L);
    for (unsigned i = 0; i < steps; ++i) r *= one_step.shift(var, static_cast<long>(i));
    return r;
}

std::optional<Rational> HypergeometricTerm::evaluate(const EvalPoint& point) const {
    auto rational_point = to_rational_point(point);
    bool undefined = false, zero = false;
    Rational value = constant_;

    if (sign_exponent_.evaluate(point) % 2 != 0) value = -value;

    for (const auto& p : powers_) {
        Rational b = p.base.evaluate(rational_point);
        Integer e = p.exponent.evaluate(point);
        auto el = to_long(e);
        if (!el) throw Error("power exponent out of range");
        if (b == 0) {
            if (*el < 0)
                undefined = true;
            else if (*el > 0)
                zero = true;
            continue;
        }
        value *= pow_rational(b, *el);
    }

    Rational pv = polynomial_part_.evaluate(rational_point);
    if (pv == 0)
        zero = true;
    else
        value *= pv;

    for (const auto& f : factorials_) {
        Integer arg = f.argument.evaluate(point);
        if (arg < 0) {
            if (f.exponent > 0)
                undefined = true;  // factorial pole in the numerator
            else
                zero = true;  // reciprocal factorial of a negative integer
            continue;
        }
        value *= pow_rational(Rational(factorial(arg)), f.exponent);
    }

    if (undefined) return std::nullopt;
    if (zero) return Rational(0);
    return value;
}

std::vector<size_t> HypergeometricTerm::default_shadow_selection() const {
    std::vector<size_t> sel;
    for (size_t i = 0; i < factorials_.size(); ++i) {
        long long a = factorials_[i].argument.coeff(Symbol::n());
        long long b = factorials_[i].argument.coeff(Symbol::k());
        if (a + b != 0) sel.push_back(i);
    }
    return sel;
}

HypergeometricTerm HypergeometricTerm::shadow(const std::vector<size_t>& selection) const {
    HypergeometricTerm r(*this);
    for (size_t idx : selection) {
        if (idx >= r.factorials_.size()) throw Error("shadow: factor index out of range");
        FactorialFactor& f = r.factorials_[idx];
        // Toggling between L!^e and its shadow ((-L-1)!)^(-e); the sign
        // (-1)^(eL) of the unshadowed form moves into the sign exponent so
        // that toggling twice restores the representation exactly.
        LinearForm unshadowed_arg = f.shadowed ? -f.argument - LinearForm(1) : f.argument;
        long unshadowed_exp = f.shadowed ? -f.exponent : f.exponent;
        r.multiply_sign(unshadowed_arg * unshadowed_exp);
        f.argument = -f.argument - LinearForm(1);
        f.exponent = -f.exponent;
        f.shadowed = !f.shadowed;
    }
    r.normalize();
    return r;
}

HypergeometricTerm HypergeometricTerm::shadow_default() const {
    return shadow(default_shadow_selection());
}

HypergeometricTerm HypergeometricTerm::affine_substitute(
    const std::map<Symbol, LinearForm>& images) const {
    std::map<Symbol, Polynomial> poly_images;
    for (const auto& [s, lf] : images) poly_images.emplace(s, lf.to_polynomial());
    HypergeometricTerm r;
    r.constant_ = constant_;
    r.sign_exponent_ = sign_exponent_.substitute(images).reduced_mod2();
    for (const auto& p : powers_) r.powers_.push_back({p.base, p.exponent.substitute(images)});
    r.polynomial_part_ = polynomial_part_.substitute_all(poly_images);
    for (const auto& f : factorials_)
        r.factorials_.push_back({f.argument.substitute(images), f.exponent, f.shadowed});
    r.normalize();
    return r;
}

namespace {

std::string linform_factor_string(const LinearForm& f) {
    // Single-symbol forms print bare; everything else gets parentheses.
    if (f.is_constant()) return "(" + f.to_string() + ")";
    if (f.constant() == 0 && f.coeffs().size() == 1 && f.coeffs().begin()->second == 1)
        return f.coeffs().begin()->first.name();
    return "(" + f.to_string() + ")";
}

}  // namespace

std::string HypergeometricTerm::to_string() const {
    std::vector<std::pair<std::string, bool>> factors;  // text, inverted
    if (!sign_exponent_.is_zero())
        factors.emplace_back("(-1)^" + linform_factor_string(sign_exponent_), false);
    for (const auto& p : powers_) {
        std::string base = p.base.is_constant() && is_integer(p.base.constant_value()) &&
                                   p.base.constant_value() > 0
                               ? to_string(p.base.constant_value())
                               : "(" + p.base.to_string() + ")";
        LinearForm e = p.exponent;
        bool inverted = false;
        // Prefer positive leading coefficient in the printed exponent.
        if (e.coeffs().empty() ? e.constant() < 0 : e.coeffs().begin()->second < 0) {
            e = -e;
            inverted = true;
        }
        factors.emplace_back(base + "^" + linform_factor_string(e), inverted);
    }
    if (!(polynomial_part_.is_constant() && polynomial_part_.constant_value() == 1))
        factors.emplace_back("(" + polynomial_part_.to_string() + ")", false);
    for (const auto& f : factorials_) {
        std::string text = linform_factor_string(f.argument) + "!";
        long reps = f.exponent < 0 ? -f.exponent : f.exponent;
        for (long i = 0; i < reps; ++i) factors.emplace_back(text, f.exponent < 0);
    }

    std::ostringstream out;
    bool wrote = false;
    if (constant_ != 1 || factors.empty()) {
        out << to_string(constant_);
        wrote = true;
    }
    for (const auto& [text, inverted] : factors) {
        if (!wrote && !inverted) {
            out << text;
            wrote = true;
            continue;
        }
        if (!wrote && inverted) {
            out << "1";
            wrote = true;
        }
        out << (inverted ? "/" : "*") << text;
    }
    return out.str();
}

// ------------------------------------------------------------- TermProduct

RationalFunction TermProduct::ratio(Symbol var) const {
    if (multiplier.is_zero()) throw Error("ratio of the zero term");
    return RationalFunction(multiplier.num().shift(var, 1) * multiplier.den(),
                            multiplier.den().shift(var, 1) * multiplier.num()) *
           base.ratio(var);
}

std::optional<Rational> TermProduct::evaluate(const EvalPoint& point) const {
    auto rational_point = to_rational_point(point);
    auto m = multiplier.evaluate(rational_point);
    if (!m) return std::nullopt;
    auto b = base.evaluate(point);
    if (!b) return std::nullopt;
    return *m * *b;
}

std::string TermProduct::to_string() const {
    if (multiplier.is_zero()) return "0";
    std::string m = multiplier.to_string();
    if (multiplier == RationalFunction(1L)) return base.to_string();
    bool simple = multiplier.is_polynomial() && multiplier.num().terms().size() == 1;
    std::string lhs = simple ? m : "(" + m + ")";
    return lhs + " * " + base.to_string();
}

// ------------------------------------------------------------------ absorb

namespace {

struct FactorList {
    std::vector<FactorialFactor> factors;

    long* exponent_of(const LinearForm& arg) {
        for (auto& f : factors)
            if (f.argument == arg) return &f.exponent;
        return nullptr;
    }
    void add(const LinearForm& arg, long delta, bool shadowed) {
        for (auto& f : factors)
            if (f.argument == arg) {
                f.exponent += delta;
                return;
            }
        factors.push_back({arg, delta, shadowed});
    }
};

}  // namespace

std::optional<HypergeometricTerm> absorb(const TermProduct& product) {
    if (product.is_zero()) return std::nullopt;
    FactorList fl{product.base.factorials()};
    Polynomial num = product.multiplier.num();
    Polynomial den = product.multiplier.den();
    Polynomial poly_part = product.base.polynomial_part();

    // Divide by each linear factor of the denominator.
    while (!den.is_constant()) {
        bool progressed = false;
        for (auto& f : fl.factors) {
            if (f.exponent >= 1) {
                // L!^e / L = L!^(e-1) (L-1)!
                Polynomial ell = f.argument.to_polynomial();
                if (auto q = den.divide_exact(ell); q && ell.total_degree() == 1) {
                    f.exponent -= 1;
                    fl.add(f.argument - LinearForm(1), 1, f.shadowed);
                    den = *q;
                    progressed = true;
                    break;
                }
            }
            if (f.exponent <= -1) {
                // 1/L!^|e| / (L+1) = 1/((L+1)! L!^(|e|-1))
                LinearForm lp1 = f.argument + LinearForm(1);
                Polynomial ell = lp1.to_polynomial();
                if (auto q = den.divide_exact(ell); q && ell.total_degree() == 1) {
                    f.exponent += 1;
                    fl.add(lp1, -1, f.shadowed);
                    den = *q;
                    progressed = true;
                    break;
                }
            }
        }
        if (!progressed) {
            Polynomial g = poly_gcd(den, poly_part);
            if (!g.is_constant()) {
                poly_part = *poly_part.divide_exact(g);
                den = *den.divide_exact(g);
                progressed = true;
            }
        }
        if (!progressed) return std::nullopt;
    }

    // Multiply in the numerator, preferring factorial increments.
    bool progressed = true;
    while (progressed && !num.is_constant()) {
        progressed = false;
        for (auto& f : fl.factors) {
            if (f.exponent >= 1) {
                // L!^e * (L+1) = (L+1)! L!^(e-1)
                LinearForm lp1 = f.argument + LinearForm(1);
                Polynomial ell = lp1.to_polynomial();
                if (auto q = num.divide_exact(ell); q && ell.total_degree() == 1) {
                    f.exponent -= 1;
                    fl.add(lp1, 1, f.shadowed);
                    num = *q;
                    progressed = true;
                    break;
                }
            }
            if (f.exponent <= -1) {
                // L * 1/L!^|e| = 1/((L-1)! L!^(|e|-1))
                Polynomial ell = f.argument.to_polynomial();
                if (auto q = num.divide_exact(ell); q && ell.total_degree() == 1) {
                    f.exponent += 1;
                    fl.add(f.argument - LinearForm(1), -1, f.shadowed);
                    num = *q;
                    progressed = true;
                    break;
                }
            }
        }
    }

    HypergeometricTerm result;
    result.multiply_constant(product.base.constant());
    result.multiply_sign(product.base.sign_exponent());
    for (const auto& p : product.base.powers()) result.multiply_power(p.base, p.exponent);
    Rational den_const = den.constant_value();
    result.multiply_constant(Rational(1) / den_const);
    Polynomial combined = poly_part * num;
    if (combined.is_zero()) return std::nullopt;
    result.multiply_polynomial(combined);
    for (const auto& f : fl.factors)
        if (f.exponent != 0) result.multiply_factorial(f.argument, f.exponent, f.shadowed);
    return result;
}

TermProduct tp_multiply(const TermProduct& a, const TermProduct& b) {
    TermProduct r;
    r.multiplier = a.multiplier * b.multiplier;
    r.base = a.base * b.base;
    return r;
}

TermProduct tp_inverse(const TermProduct& t) {
    if (t.is_zero()) throw Error("inverse of zero");
    const HypergeometricTerm& b = t.base;
    HypergeometricTerm inv;
    inv.multiply_constant(Rational(1) / b.constant());
    inv.multiply_sign(b.sign_exponent());
    for (const auto& p : b.powers()) inv.multiply_power(p.base, -p.exponent);
    for (const auto& f : b.factorials()) inv.multiply_factorial(f.argument, -f.exponent, f.shadowed);
    TermProduct r;
    r.multiplier = t.multiplier.reciprocal() / RationalFunction(b.polynomial_part());
    r.base = inv;
    return r;
}

TermProduct tp_normalize(const TermProduct& t) {
    if (t.is_zero()) throw Error("zero term");
    if (auto pure = absorb(t)) return TermProduct{RationalFunction(1L), *pure};
    TermProduct r = t;
    Polynomial num = r.multiplier.num();
    if (!(num.is_constant() && num.constant_value() == 1)) {
        r.base.multiply_polynomial(num);
        r.multiplier = RationalFunction(Polynomial(Rational(1)), r.multiplier.den());
    }
    return r;
}

RationalFunction tp_ratio_power(const TermProduct& t, Symbol var, unsigned steps) {
    RationalFunction one_step = t.ratio(var);
    RationalFunction r(1L);
    for (unsigned i = 0; i < steps; ++i) r *= one_step.shift(var, static_cast<long>(i));
    return r;
}

bool same_term_values(const TermProduct& a, const TermProduct& b,
                      const std::vector<Symbol>& vars, const EvalPoint& sample) {
    for (Symbol v : vars)
        if (!(a.ratio(v) == b.ratio(v))) return false;
    auto va = a.evaluate(sample), vb = b.evaluate(sample);
    if (!va || !vb) return false;
    return *va == *vb;
}

}  // namespace hypersum

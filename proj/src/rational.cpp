#include "hypersum/rational.hpp"

namespace hypersum {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        if (q.get_den() == 0) throw Error("zero denominator in rational literal: " + text);
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<long> to_long(const Integer& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return z.get_si();
}

std::optional<long> to_long(const Rational& q) {
    if (!is_integer(q)) return std::nullopt;
    return to_long(q.get_num());
}

Integer factorial(const Integer& m) {
    if (m < 0) throw Error("factorial of negative integer");
    auto small = to_long(m);
    if (!small) throw Error("factorial argument too large");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(*small));
    return r;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw Error("zero raised to a negative power");
        return Rational(0);
    }
    Rational b = exp >= 0 ? base : Rational(1) / base;
    unsigned long e = static_cast<unsigned long>(exp >= 0 ? exp : -exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace hypersum

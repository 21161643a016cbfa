#include "hypersum/linear_form.hpp"

#include <sstream>

namespace hypersum {

LinearForm LinearForm::variable(Symbol s, long long coeff) {
    LinearForm f;
    if (coeff != 0) f.coeffs_[s] = coeff;
    return f;
}

long long LinearForm::coeff(Symbol s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? 0 : it->second;
}

bool LinearForm::depends_on_parameters() const {
    for (const auto& [s, c] : coeffs_)
        if (s.is_parameter()) return true;
    return false;
}

void LinearForm::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

LinearForm LinearForm::operator-() const {
    LinearForm r(*this);
    r.constant_ = -r.constant_;
    for (auto& [s, c] : r.coeffs_) c = -c;
    return r;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm r(*this);
    r += o;
    return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [s, c] : o.coeffs_) coeffs_[s] += c;
    prune();
    return *this;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator*(long long c) const {
    LinearForm r;
    if (c == 0) return r;
    r.constant_ = constant_ * c;
    for (const auto& [s, v] : coeffs_) r.coeffs_[s] = v * c;
    return r;
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
    return constant_ < o.constant_;
}

LinearForm LinearForm::substitute(const std::map<Symbol, LinearForm>& images) const {
    LinearForm r(constant_);
    for (const auto& [s, c] : coeffs_) {
        auto it = images.find(s);
        if (it == images.end())
            r += LinearForm::variable(s, c);
        else
            r += it->second * c;
    }
    return r;
}

Integer LinearForm::evaluate(const std::map<Symbol, Integer>& assignment) const {
    Integer v(constant_);
    for (const auto& [s, c] : coeffs_) {
        auto it = assignment.find(s);
        if (it == assignment.end()) throw Error("evaluate: unassigned symbol " + s.name());
        v += Integer(c) * it->second;
    }
    return v;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(Rational(constant_));
    for (const auto& [s, c] : coeffs_) p += Polynomial::variable(s) * Rational(c);
    return p;
}

std::optional<LinearForm> LinearForm::from_polynomial(const Polynomial& p) {
    LinearForm f;
    for (const auto& [m, c] : p.terms()) {
        if (m.total_degree() > 1) return std::nullopt;
        if (!is_integer(c)) return std::nullopt;
        auto v = to_long(c);
        if (!v) return std::nullopt;
        if (m.is_one())
            f.constant_ = *v;
        else
            f.coeffs_[m.factors().front().first] = *v;
    }
    return f;
}

LinearForm LinearForm::reduced_mod2() const {
    LinearForm r;
    r.constant_ = ((constant_ % 2) + 2) % 2;
    for (const auto& [s, c] : coeffs_) {
        long long m = ((c % 2) + 2) % 2;
        if (m != 0) r.coeffs_[s] = m;
    }
    return r;
}

std::string LinearForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : coeffs_) {
        if (c < 0)
            out << "-";
        else if (!first)
            out << "+";
        long long a = c < 0 ? -c : c;
        if (a != 1) out << a << "*";
        out << s.name();
        first = false;
    }
    if (constant_ != 0) {
        if (constant_ > 0 && !first) out << "+";
        out << constant_;
    }
    return out.str();
}

}  // namespace hypersum

#include "hypersum/oracle.hpp"

#include <sstream>

namespace hypersum {

namespace {

std::string point_to_string(const EvalPoint& point) {
    std::string out;
    for (const auto& [s, v] : point) {
        if (!out.empty()) out += ", ";
        out += s.name() + " = " + to_string(v);
    }
    return out;
}

}  // namespace

Rational oracle_sum_at(const TermProduct& F, Symbol sumvar, const EvalPoint& outer,
                       const OracleOptions& opts) {
    // Prefer the absorbed form: the split multiplier may have spurious poles
    // that the product itself does not.
    TermProduct working = F;
    if (auto pure = absorb(F)) working = TermProduct{RationalFunction(1L), *pure};

    long lo, hi;
    if (opts.window) {
        lo = opts.window->first;
        hi = opts.window->second;
    } else {
        Integer m(0);
        long outer_abs = 0;
        for (const auto& [s, v] : outer) {
            Integer a = abs(v);
            if (s == sumvar) continue;
            if (s.is_parameter() && a > m) m = a;
            if (!s.is_parameter()) outer_abs = std::max(outer_abs, to_long(a).value_or(0));
        }
        long radius = outer_abs + to_long(m).value_or(0) + opts.margin;
        lo = -radius;
        hi = radius;
    }

    Rational total(0);
    EvalPoint point = outer;
    for (const auto& [s, v] : opts.parameter_values) point[s] = v;
    for (long v = lo; v <= hi; ++v) {
        point[sumvar] = Integer(v);
        auto value = working.evaluate(point);
        if (!value) throw Error("oracle: undefined summand at " + point_to_string(point));
        total += *value;
    }
    return total;
}

OracleReport oracle_sum(const TermProduct& F, Symbol freevar, long lo, long hi, Symbol sumvar,
                        const OracleOptions& opts) {
    OracleReport report;
    report.freevar = freevar;
    if (opts.window) report.window_used = *opts.window;
    for (long v = lo; v <= hi; ++v) {
        EvalPoint outer;
        outer[freevar] = Integer(v);
        report.free_values.push_back(v);
        report.sums.push_back(oracle_sum_at(F, sumvar, outer, opts));
        if (!opts.window) {
            Integer m(0);
            for (const auto& [s, pv] : opts.parameter_values) {
                Integer a = abs(pv);
                if (a > m) m = a;
            }
            long radius = std::abs(v) + to_long(m).value_or(0) + opts.margin;
            report.window_used = {-radius, radius};  // window of the last row
        }
    }
    return report;
}

bool oracle_check_recurrence(const RecurrenceOperator& op, const std::vector<Rational>& values,
                             long n0, const std::map<Symbol, Rational>& parameter_values,
                             std::vector<Rational>* residuals) {
    unsigned order = op.order();
    if (values.size() <= order) throw Error("oracle_check_recurrence: not enough values");
    bool ok = true;
    for (size_t base = 0; base + order < values.size(); ++base) {
        long n = n0 + static_cast<long>(base);
        std::map<Symbol, Rational> point = parameter_values;
        point[op.recvar] = Rational(n);
        Rational residual(0);
        for (size_t i = 0; i < op.coefficients.size(); ++i)
            residual += op.coefficients[i].evaluate(point) * values[base + i];
        if (residuals) residuals->push_back(residual);
        if (residual != 0) ok = false;
    }
    return ok;
}

std::string OracleReport::to_json() const {
    std::ostringstream out;
    out << "{\n  \"" << freevar.name() << "\": [";
    for (size_t i = 0; i < free_values.size(); ++i)
        out << (i ? ", " : "") << free_values[i];
    out << "],\n  \"sum\": [";
    for (size_t i = 0; i < sums.size(); ++i)
        out << (i ? ", " : "") << '"' << to_string(sums[i]) << '"';
    out << "],\n  \"residuals\": [";
    for (size_t i = 0; i < residuals.size(); ++i)
        out << (i ? ", " : "") << '"' << to_string(residuals[i]) << '"';
    out << "],\n  \"window\": [" << window_used.first << ", " << window_used.second << "]\n}";
    return out.str();
}

}  // namespace hypersum

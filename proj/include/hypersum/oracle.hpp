#pragma once

#include "hypersum/term.hpp"
#include "hypersum/zeilberger.hpp"

#include <vector>

namespace hypersum {

struct OracleOptions {
    /// Explicit summation window; when absent the auto window
    /// [-(|outer| + M + margin), |outer| + M + margin] is used, with M the
    /// largest absolute parameter value.
    std::optional<std::pair<long, long>> window;
    long margin = 50;
    std::map<Symbol, Integer> parameter_values;
};

/// Exact sum over `sumvar` with the remaining variables fixed by `outer`.
/// Undefined evaluation points are an error naming the point (they signal a
/// numerator factorial at a negative integer, i.e. support misuse).
Rational oracle_sum_at(const TermProduct& F, Symbol sumvar, const EvalPoint& outer,
                       const OracleOptions& opts = {});

struct OracleReport {
    Symbol freevar = Symbol::n();
    std::vector<long> free_values;
    std::vector<Rational> sums;
    std::vector<Rational> residuals;  // empty unless a recurrence was checked
    std::pair<long, long> window_used{0, 0};

    std::string to_json() const;
};

/// Sums for freevar = lo..hi (inclusive); realizes a(n) = sum_k F(n,k).
OracleReport oracle_sum(const TermProduct& F, Symbol freevar, long lo, long hi, Symbol sumvar,
                        const OracleOptions& opts = {});

/// Check sum_i s_i(n) values[n + i] = 0 exactly for every admissible n.
bool oracle_check_recurrence(const RecurrenceOperator& op, const std::vector<Rational>& values,
                             long n0, const std::map<Symbol, Rational>& parameter_values = {},
                             std::vector<Rational>* residuals = nullptr);

}  // namespace hypersum

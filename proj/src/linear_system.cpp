#include "hypersum/linear_system.hpp"

#include <algorithm>

namespace hypersum {

LinearSolution solve_linear(std::vector<std::vector<RationalFunction>> m,
                            std::vector<RationalFunction> rhs) {
    size_t rows = m.size();
    if (rhs.size() != rows) throw Error("solve_linear: shape mismatch");
    size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw Error("solve_linear: ragged matrix");

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[row]);
        std::swap(rhs[pr], rhs[row]);
        RationalFunction inv = m[row][col].reciprocal();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            RationalFunction f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution sol;
    for (size_t i = row; i < rows; ++i)
        if (!rhs[i].is_zero()) return sol;  // 0 = nonzero

    sol.particular.assign(cols, RationalFunction());
    for (size_t r = 0; r < pivot_col.size(); ++r) sol.particular[pivot_col[r]] = rhs[r];

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<RationalFunction> v(cols, RationalFunction());
        v[free_col] = RationalFunction(1L);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free_col];
        sol.nullspace.push_back(std::move(v));
    }
    sol.status = sol.nullspace.empty() ? LinearSolution::Status::Unique
                                       : LinearSolution::Status::Parametric;
    return sol;
}

ExtractedSystem extract_linear_system(const std::vector<Polynomial>& equations,
                                      const std::vector<Symbol>& unknowns,
                                      const std::vector<Symbol>& rowvars) {
    ExtractedSystem out;
    for (const Polynomial& eq : equations) {
        // Split off the coefficient of each unknown; what remains is the
        // inhomogeneous part. Quadratic appearances are a caller bug.
        Polynomial rest = eq;
        std::vector<Polynomial> coeffs;
        coeffs.reserve(unknowns.size());
        for (Symbol u : unknowns) {
            if (eq.degree(u) > 1) throw Error("extract_linear_system: not linear in " + u.name());
            Polynomial cu = eq.coefficient_of(u, 1);
            for (Symbol v : unknowns)
                if (cu.contains(v)) throw Error("extract_linear_system: cross term in unknowns");
            coeffs.push_back(cu);
            rest -= cu * Polynomial::variable(u);
        }
        // One row per monomial of the row variables.
        std::map<Monomial, std::pair<std::vector<Polynomial>, Polynomial>> rows;
        auto add = [&](const Polynomial& p, size_t idx, bool constant_part) {
            for (auto& [mono, part] : p.split_by(rowvars)) {
                auto& slot = rows[mono];
                if (slot.first.empty()) slot.first.assign(unknowns.size(), Polynomial());
                if (constant_part)
                    slot.second += part;
                else
                    slot.first[idx] += part;
            }
        };
        for (size_t i = 0; i < coeffs.size(); ++i) add(coeffs[i], i, false);
        add(rest, 0, true);

        for (auto& [mono, slot] : rows) {
            if (slot.first.empty()) slot.first.assign(unknowns.size(), Polynomial());
            std::vector<RationalFunction> row;
            row.reserve(unknowns.size());
            for (const auto& c : slot.first) row.emplace_back(c);
            out.matrix.push_back(std::move(row));
            out.rhs.emplace_back(-slot.second);
        }
    }
    return out;
}

}  // namespace hypersum

#pragma once

#include "hypersum/rational_function.hpp"

#include <vector>

namespace hypersum {

/// Outcome of exact Gaussian elimination over the rational-function field.
/// `particular` + span(`nullspace`) describes the full solution set.
struct LinearSolution {
    enum class Status { Unique, Parametric, Unsolvable };
    Status status = Status::Unsolvable;
    std::vector<RationalFunction> particular;
    std::vector<std::vector<RationalFunction>> nullspace;

    bool solvable() const { return status != Status::Unsolvable; }
};

LinearSolution solve_linear(std::vector<std::vector<RationalFunction>> matrix,
                            std::vector<RationalFunction> rhs);

/// Rows of a linear system extracted from polynomial identities.
/// Each equation polynomial must be linear (degree <= 1, no cross terms) in
/// the unknown symbols; it is required to vanish identically in `rowvars`,
/// which yields one row per monomial in those variables. The remaining
/// variables become the coefficient field.
struct ExtractedSystem {
    std::vector<std::vector<RationalFunction>> matrix;
    std::vector<RationalFunction> rhs;
};

ExtractedSystem extract_linear_system(const std::vector<Polynomial>& equations,
                                      const std::vector<Symbol>& unknowns,
                                      const std::vector<Symbol>& rowvars);

}  // namespace hypersum

#pragma once

#include "hypersum/oracle.hpp"
#include "hypersum/term.hpp"

namespace hypersum {

/// WZ pair: F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) with G = R F.
struct WZPair {
    TermProduct F;
    RationalFunction R;

    TermProduct G() const { return TermProduct{R * F.multiplier, F.base}; }
};

/// Wilf's construction: divide by the conjectured closed form and Gosper the
/// n-difference in k. nullopt when Gosper declines (the identity is not
/// WZ-certifiable at order 1; callers fall back to creative telescoping).
std::optional<WZPair> make_wz_pair(const TermProduct& F_raw, const TermProduct& nice);

/// Exact rational-function check of (WZ), plus integer spot checks of the
/// defining identity where both sides evaluate.
bool verify_wz(const WZPair& pair, int spot_checks = 50, unsigned seed = 20240229);

struct AffineMap {
    LinearForm n_image = LinearForm::variable(Symbol::n());
    LinearForm k_image = LinearForm::variable(Symbol::k());

    static AffineMap identity() { return {}; }
    /// "n=-n-1,k=-k" style; either entry may be omitted.
    static AffineMap parse(const std::string& spec);
    std::map<Symbol, LinearForm> images() const;
    std::string to_string() const;
};

enum class ShadowMode { Default, None, Explicit };
struct ShadowSelection {
    ShadowMode mode = ShadowMode::Default;
    std::vector<size_t> indices;  // used when mode == Explicit
};

/// The dual identity: sum over `sumvar` of `summand` equals
/// constant / extracted(freevar), oracle-verified over `free_window`.
struct DualClaim {
    TermProduct summand;
    HypergeometricTerm extracted;  // invertible freevar-only factor
    Rational constant = 0;
    Symbol sumvar = Symbol::n();
    Symbol freevar = Symbol::k();
    std::pair<long, long> free_window{1, 12};

    /// The claimed right-hand side C / extracted as a printable term.
    std::string rhs_text() const;
    std::string to_json() const;
};

struct DualOptions {
    std::pair<long, long> free_window{1, 12};
    long sum_margin = 50;
    std::map<Symbol, Integer> parameter_values;
};

/// Shadow G, reindex, split off the free-variable-only content, and verify
/// constancy of the dual sum on a finite window. Throws (with the
/// counterexample) when the sums fail to be constant.
DualClaim dualize(const WZPair& pair, const ShadowSelection& selection, const AffineMap& reindex,
                  const DualOptions& opts = {});

}  // namespace hypersum

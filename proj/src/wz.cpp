#include "hypersum/wz.hpp"

#include "hypersum/gosper.hpp"
#include "hypersum/parser.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hypersum {

std::optional<WZPair> make_wz_pair(const TermProduct& F_raw, const TermProduct& nice) {
    if (nice.is_zero()) throw Error("make_wz_pair: zero divisor");
    if (nice.base.depends_on(Symbol::k()) || nice.multiplier.contains(Symbol::k()))
        throw Error("make_wz_pair: the closed form must depend on n and parameters only");

    TermProduct F = tp_normalize(tp_multiply(F_raw, tp_inverse(nice)));
    Symbol n = Symbol::n(), k = Symbol::k();

    RationalFunction delta = F.ratio(n) - RationalFunction(1L);
    if (delta.is_zero()) return WZPair{F, RationalFunction()};

    TermProduct difference{F.multiplier * delta, F.base};
    GosperResult g = gosper_sum(difference, k);
    if (!g.summable) return std::nullopt;

    // Forward convention: G(n,k) := T(n,k-1), so R = T(k-1)/F(k).
    RationalFunction base_rho_k = F.base.ratio(k).shift(k, -1);
    RationalFunction R =
        g.antidifference.multiplier.shift(k, -1) / (F.multiplier * base_rho_k);
    WZPair pair{F, R};
    if (!verify_wz(pair, 0)) throw Error("make_wz_pair: pair failed symbolic verification");
    return pair;
}

bool verify_wz(const WZPair& pair, int spot_checks, unsigned seed) {
    Symbol n = Symbol::n(), k = Symbol::k();
    RationalFunction lhs = pair.F.ratio(n) - RationalFunction(1L);
    RationalFunction rhs = pair.R.shift(k, 1) * pair.F.ratio(k) - pair.R;
    if (!(lhs - rhs).is_zero()) return false;

    if (spot_checks > 0) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<long> coord(-8, 14);
        // Bind any free parameters to small fixed integers.
        EvalPoint params;
        std::vector<Symbol> param_syms;
        auto collect = [&](const RationalFunction& rf) {
            for (Symbol s : rf.num().variables())
                if (s.is_parameter()) param_syms.push_back(s);
            for (Symbol s : rf.den().variables())
                if (s.is_parameter()) param_syms.push_back(s);
        };
        collect(pair.F.multiplier);
        collect(pair.R);
        for (const auto& f : pair.F.base.factorials())
            for (const auto& [s, c] : f.argument.coeffs())
                if (s.is_parameter()) param_syms.push_back(s);
        long value = 3;
        for (Symbol s : param_syms)
            if (!params.count(s)) params[s] = Integer(value += 2);

        TermProduct G = pair.G();
        int checked = 0;
        for (int i = 0; i < spot_checks * 4 && checked < spot_checks; ++i) {
            EvalPoint point = params;
            point[n] = Integer(coord(rng));
            point[k] = Integer(coord(rng));
            auto f0 = pair.F.evaluate(point);
            auto g0 = G.evaluate(point);
            EvalPoint up = point, right = point;
            up[n] = up[n] + 1;
            right[k] = right[k] + 1;
            auto f1 = pair.F.evaluate(up);
            auto g1 = G.evaluate(right);
            if (!f0 || !f1 || !g0 || !g1) continue;
            if (*f1 - *f0 != *g1 - *g0) return false;
            ++checked;
        }
    }
    return true;
}

// ---------------------------------------------------------------- reindex

AffineMap AffineMap::parse(const std::string& spec) {
    AffineMap map;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t next = spec.find(',', pos);
        std::string entry = spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? spec.size() : next + 1;
        size_t eq = entry.find('=');
        if (eq == std::string::npos) throw Error("reindex entry needs var=expression: " + entry);
        std::string lhs = entry.substr(0, eq);
        lhs.erase(remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
        LinearForm image = parse_linear_form(entry.substr(eq + 1));
        if (lhs == "n")
            map.n_image = image;
        else if (lhs == "k")
            map.k_image = image;
        else
            throw Error("reindex can only remap n and k");
    }
    return map;
}

std::map<Symbol, LinearForm> AffineMap::images() const {
    return {{Symbol::n(), n_image}, {Symbol::k(), k_image}};
}

std::string AffineMap::to_string() const {
    return "n=" + n_image.to_string() + ",k=" + k_image.to_string();
}

// ---------------------------------------------------------------- dualize

namespace {

RationalFunction substitute_affine(const RationalFunction& rf,
                                   const std::map<Symbol, LinearForm>& images) {
    std::map<Symbol, Polynomial> poly_images;
    for (const auto& [s, lf] : images) poly_images.emplace(s, lf.to_polynomial());
    return RationalFunction(rf.num().substitute_all(poly_images),
                            rf.den().substitute_all(poly_images));
}

// Split the freevar-only sign/power/constant content out of the base term.
std::pair<TermProduct, HypergeometricTerm> extract_free_content(const TermProduct& t,
                                                                Symbol sumvar) {
    const HypergeometricTerm& b = t.base;
    HypergeometricTerm kept, extracted;

    extracted.multiply_constant(b.constant());

    LinearForm sign = b.sign_exponent();
    LinearForm sign_sum = LinearForm::variable(sumvar, sign.coeff(sumvar));
    kept.multiply_sign(sign_sum);
    extracted.multiply_sign(sign - sign_sum);

    for (const auto& p : b.powers()) {
        LinearForm e_sum = LinearForm::variable(sumvar, p.exponent.coeff(sumvar));
        LinearForm e_free = p.exponent - e_sum;
        if (!e_sum.is_zero()) kept.multiply_power(p.base, e_sum);
        if (!e_free.is_zero()) extracted.multiply_power(p.base, e_free);
    }

    kept.multiply_polynomial(b.polynomial_part());
    for (const auto& f : b.factorials()) kept.multiply_factorial(f.argument, f.exponent, f.shadowed);
    return {TermProduct{t.multiplier, kept}, extracted};
}

}  // namespace

DualClaim dualize(const WZPair& pair, const ShadowSelection& selection, const AffineMap& reindex,
                  const DualOptions& opts) {
    Symbol n = Symbol::n(), k = Symbol::k();

    std::vector<size_t> indices;
    switch (selection.mode) {
        case ShadowMode::Default: indices = pair.F.base.default_shadow_selection(); break;
        case ShadowMode::None: break;
        case ShadowMode::Explicit: indices = selection.indices; break;
    }
    HypergeometricTerm shadowed = pair.F.base.shadow(indices);
    TermProduct G_shadowed{pair.R * pair.F.multiplier, shadowed};

    // The original dual sums over the first argument at fixed second
    // argument; after substituting (n,k) -> (n_image, k_image) the new
    // summation variable is the one that moves n_image alone.
    Symbol sumvar, freevar;
    if (reindex.k_image.coeff(n) == 0 && std::abs(reindex.n_image.coeff(n)) == 1 &&
        reindex.k_image.coeff(k) != 0) {
        sumvar = n;
        freevar = k;
    } else if (reindex.k_image.coeff(k) == 0 && std::abs(reindex.n_image.coeff(k)) == 1 &&
               reindex.k_image.coeff(n) != 0) {
        sumvar = k;
        freevar = n;
    } else {
        throw Error("dualize: reindex map must send one variable to the summation line "
                    "and keep the other free (got " + reindex.to_string() + ")");
    }

    auto images = reindex.images();
    TermProduct raw{substitute_affine(G_shadowed.multiplier, images),
                    G_shadowed.base.affine_substitute(images)};
    TermProduct normalized = tp_normalize(raw);

    auto [summand, extracted] = extract_free_content(normalized, sumvar);

    DualClaim claim;
    claim.summand = summand;
    claim.extracted = extracted;
    claim.sumvar = sumvar;
    claim.freevar = freevar;
    claim.free_window = opts.free_window;

    OracleOptions oracle_opts;
    oracle_opts.margin = opts.sum_margin;
    oracle_opts.parameter_values = opts.parameter_values;

    // C = extracted(v) * sum_sumvar summand, the constant of the full dual.
    bool have_constant = false;
    for (long v = opts.free_window.first; v <= opts.free_window.second; ++v) {
        EvalPoint outer;
        outer[freevar] = Integer(v);
        for (const auto& [s, pv] : opts.parameter_values) outer[s] = pv;
        auto factor = extracted.evaluate(outer);
        if (!factor) throw Error("dualize: extracted factor undefined at " + freevar.name() +
                                 " = " + std::to_string(v));
        Rational sum = oracle_sum_at(summand, sumvar, outer, oracle_opts);
        Rational c = *factor * sum;
        if (!have_constant) {
            claim.constant = c;
            have_constant = true;
        } else if (c != claim.constant) {
            throw Error("dualize: dual sum is not constant: value " + to_string(c) + " at " +
                        freevar.name() + " = " + std::to_string(v) + " vs " +
                        to_string(claim.constant));
        }
    }
    return claim;
}

std::string DualClaim::rhs_text() const {
    if (constant == 0) return "0";
    TermProduct inverted = tp_inverse(TermProduct{RationalFunction(1L), extracted});
    inverted.multiplier *= RationalFunction(constant);
    if (auto pure = absorb(inverted)) return pure->to_string();
    return inverted.to_string();
}

std::string DualClaim::to_json() const {
    std::ostringstream out;
    out << "{\n"
        << "  \"sumvar\": \"" << sumvar.name() << "\",\n"
        << "  \"freevar\": \"" << freevar.name() << "\",\n"
        << "  \"summand\": \"" << summand.to_string() << "\",\n"
        << "  \"rhs\": \"" << rhs_text() << "\",\n"
        << "  \"constant\": \"" << to_string(constant) << "\",\n"
        << "  \"window\": [" << free_window.first << ", " << free_window.second << "],\n"
        << "  \"status\": \"verified\"\n}";
    return out.str();
}

}  // namespace hypersum

#include "nonsimple/bounds.hpp"

#include <cmath>

#include "nonsimple/primes.hpp"
#include "nonsimple/symplectic.hpp"

namespace nonsimple {

namespace {

double log_int(const Int& v) {
    if (v <= 0)
        throw internal_error("log_int: nonpositive value");
    long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

double to_double_sat(const Int& v) {
    long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    if (exp2 > 1020)
        return HUGE_VAL;
    return std::ldexp(d, static_cast<int>(exp2));
}

void validate(const BoundParams& params) {
    if (params.g == 0 || params.d == 0 || params.d_K == 0)
        throw invalid_input_error("BoundParams: g, d and d_K must be >= 1");
    if (params.c <= 0 || params.C_iota <= 0 || params.kappa < 0)
        throw invalid_input_error("BoundParams: c and C_iota must be positive, kappa >= 0");
    if (params.ell0 == 0)
        throw invalid_input_error("BoundParams: ell0 must be >= 1");
}

unsigned effective_g(const CoverCase& c, const BoundParams& params) {
    return c.kind == CoverCase::Kind::fourth_power ? 4 * params.g : params.g;
}

// exponent e of the optimized level ell ~ (log B)^e
double case_exponent(const CoverCase& c, const BoundParams& params) {
    switch (c.kind) {
    case CoverCase::Kind::diagonal: {
        if (c.gB < 1 || c.gB > params.g - c.gB)
            throw invalid_input_error("CoverCase: diagonal requires 1 <= gB <= gC");
        unsigned gC = params.g - c.gB;
        return 1.0 / (4.0 * c.gB * gC);
    }
    case CoverCase::Kind::parabolic: {
        double gg = params.g;
        return 2.0 / (gg * gg + gg);
    }
    case CoverCase::Kind::fourth_power: {
        double gg = 4.0 * params.g;
        return 2.0 / (gg * gg + gg);
    }
    }
    throw internal_error("CoverCase: unknown kind");
}

// exponent E of the admissibility threshold B0 = exp(ell0^E). The fourth-power
// case keeps the family-g threshold: its own exponent would put B0 beyond any
// evaluable height.
double threshold_exponent(const CoverCase& c, const BoundParams& params) {
    if (c.kind == CoverCase::Kind::diagonal)
        return 4.0 * c.gB * (params.g - c.gB);
    double gg = params.g;
    return (gg * gg + gg) / 2.0;
}

} // namespace

std::string CoverCase::name() const {
    switch (kind) {
    case Kind::diagonal:
        return "diagonal(" + std::to_string(gB) + ")";
    case Kind::parabolic:
        return "parabolic";
    case Kind::fourth_power:
        return "fourth-power";
    }
    return "?";
}

ModuliDims moduli_dims(unsigned g) {
    if (g == 0)
        throw invalid_input_error("moduli_dims: g must be >= 1");
    unsigned long gl = g;
    return ModuliDims{gl * (gl + 1) / 2 + 1, 4 * gl * (8 * gl + 1)};
}

std::vector<CoverCase> cover_cases(unsigned g) {
    std::vector<CoverCase> cases;
    for (unsigned gB = 1; gB <= g / 2; ++gB)
        cases.push_back(CoverCase::diagonal(gB));
    cases.push_back(CoverCase::parabolic());
    cases.push_back(CoverCase::fourth_power());
    return cases;
}

Int cover_degree_exact(const CoverCase& c, const BoundParams& params, unsigned long ell) {
    validate(params);
    if (!is_prime(ell))
        throw invalid_input_error("cover_degree: ell must be prime");
    unsigned ge = effective_g(c, params);
    ModuliDims dims = moduli_dims(ge);
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), dims.N + dims.M, dims.N);
    Int index;
    if (c.kind == CoverCase::Kind::diagonal) {
        case_exponent(c, params); // validates gB
        index = block_diag_index(params.g, c.gB, ell);
    } else {
        index = isotropic_count(ge, ell, ge);
    }
    return Int(static_cast<long>(params.d)) * binom * index;
}

double cover_degree_log(const CoverCase& c, const BoundParams& params, unsigned long ell) {
    return log_int(cover_degree_exact(c, params, ell));
}

double height_lift_bound_log(double log_B, const BoundParams& params, unsigned long ell) {
    validate(params);
    if (log_B < 0)
        throw invalid_input_error("height_lift_bound_log: B must be >= 1");
    return std::log(params.C_iota) + 4.0 * params.g * std::log(static_cast<double>(ell)) +
           9.0 * params.d * log_B;
}

double point_count_bound_log(const Int& deg_curve, double height_log, const BoundParams& params) {
    validate(params);
    if (deg_curve < 1)
        throw invalid_input_error("point_count_bound_log: degree must be >= 1");
    if (!(height_log > std::log(2.0)))
        throw invalid_input_error("point_count_bound_log: height must exceed 2");
    double deg_log = log_int(deg_curve);
    double ratio = 2.0 * params.d_K / to_double_sat(deg_curve); // 0 for huge degrees
    return std::log(params.c) + 2.0 * deg_log + ratio * height_log +
           params.kappa * std::log(height_log);
}

unsigned long optimize_level(double log_B, const CoverCase& c, const BoundParams& params) {
    validate(params);
    double E = threshold_exponent(c, params);
    double log_B0 = std::pow(static_cast<double>(params.ell0), E);
    if (log_B < log_B0)
        throw below_threshold_error("optimize_level: B below the admissible B0 = e^" +
                                        std::to_string(log_B0),
                                    log_B0);
    double target = std::pow(log_B, case_exponent(c, params));
    // snap near-integers so that exact powers round predictably
    double snapped = std::nearbyint(target);
    if (std::fabs(target - snapped) < 1e-9 * std::max(1.0, std::fabs(target)))
        target = snapped;
    auto floor_target = static_cast<unsigned long>(std::ceil(target));
    unsigned long start = std::max(params.ell0, floor_target);
    return next_prime_at_least(start < 2 ? 2 : start);
}

CaseEvaluation evaluate_case(double log_B, const CoverCase& c, const BoundParams& params) {
    unsigned long ell = optimize_level(log_B, c, params);
    BoundParams eff = params;
    eff.g = effective_g(c, params);
    Int deg = cover_degree_exact(c, params, ell);
    double lift = height_lift_bound_log(log_B, eff, ell);
    double bound = point_count_bound_log(deg, lift, params);
    return CaseEvaluation{ell, log_int(deg), lift, bound};
}

double s_bound_log(double log_B, const CoverCase& c, const BoundParams& params) {
    return evaluate_case(log_B, c, params).bound_log;
}

double total_bound_log(double log_B, const BoundParams& params) {
    validate(params);
    std::vector<double> bounds;
    for (const CoverCase& c : cover_cases(params.g))
        bounds.push_back(s_bound_log(log_B, c, params));
    double m = bounds[0];
    for (double b : bounds)
        m = std::max(m, b);
    double acc = 0;
    for (double b : bounds)
        acc += std::exp(b - m);
    return m + std::log(acc);
}

double comparison_bound_log(double log_B, unsigned g, double C, double D) {
    if (log_B < 0)
        throw invalid_input_error("comparison_bound_log: B must be >= 1");
    if (C <= 0 || D < 1 || g == 0)
        throw invalid_input_error("comparison_bound_log: need C > 0, D >= 1, g >= 1");
    double gg = g;
    return std::log(C) +
           11.0 * gg * gg * (2.0 * std::log(gg) + std::log(D) + std::log(std::log(2.0) + log_B));
}

double parse_log_height_bound(const std::string& text) {
    if (text.empty())
        throw invalid_input_error("height bound: empty");
    if (text[0] == 'e' || text[0] == 'E') {
        try {
            size_t used = 0;
            double v = std::stod(text.substr(1), &used);
            if (used + 1 != text.size() || v < 0)
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw invalid_input_error("height bound: cannot parse \"" + text + "\"");
        }
    }
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || v < 1)
            throw std::invalid_argument("");
        return std::log(v);
    } catch (const std::exception&) {
        throw invalid_input_error("height bound: cannot parse \"" + text + "\"");
    }
}

} // namespace nonsimple

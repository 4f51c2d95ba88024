#pragma once

#include <string>
#include <vector>

#include "nonsimple/heights.hpp"

namespace nonsimple {

/// Constants of the quantitative pipeline. kappa, c, C_iota, C_prime and ell0
/// are not effective in the underlying theorems; the defaults are labeled
/// placeholders and every report states bound shapes, not absolute truths.
struct BoundParams {
    unsigned g = 2;       // dimension of the fibers
    unsigned d = 1;       // degree of the family curve under the embedding
    unsigned d_K = 1;     // degree of the base field
    double c = 1.0;       // point-count constant c(K, n)
    double kappa = 4.0;   // point-count log exponent
    double C_iota = 1.0;  // height constant of the embedding
    double C_prime = 1.0; // free constant of the optimized exponent (reported only)
    unsigned long ell0 = 5; // big-monodromy threshold: levels never drop below it
};

/// Which congruence cover captures the non-simple point.
struct CoverCase {
    enum class Kind { diagonal, parabolic, fourth_power };

    Kind kind = Kind::parabolic;
    unsigned gB = 0; // only for diagonal; gC = g - gB with 1 <= gB <= gC

    static CoverCase diagonal(unsigned gB_) { return {Kind::diagonal, gB_}; }
    static CoverCase parabolic() { return {Kind::parabolic, 0}; }
    static CoverCase fourth_power() { return {Kind::fourth_power, 0}; }
    std::string name() const;
};

/// N = dim A_g + 1 and M = dim A_{8g} for the product embedding.
struct ModuliDims {
    unsigned long N;
    unsigned long M;
};
ModuliDims moduli_dims(unsigned g);

/// The three case families for dimension g: Diagonal(gB) for 1 <= gB <= g/2,
/// Parabolic, FourthPower.
std::vector<CoverCase> cover_cases(unsigned g);

/// Exact degree d * binom(N+M, N) * index of the lifted curve; the index is
/// the block-diagonal index (diagonal) or the Lagrangian count (parabolic;
/// fourth_power substitutes g -> 4g throughout).
Int cover_degree_exact(const CoverCase& c, const BoundParams& params, unsigned long ell);

/// log of cover_degree_exact.
double cover_degree_log(const CoverCase& c, const BoundParams& params, unsigned long ell);

/// log(C_iota) + 4 g log(ell) + 9 d log(B): height of the lifted point.
/// Callers pass effective parameters (g -> 4g for the fourth-power case).
double height_lift_bound_log(double log_B, const BoundParams& params, unsigned long ell);

/// log of the point-count bound c d^2 B^{2 d_K / d} (log B)^kappa applied to a
/// curve of exact degree deg_curve and height exp(height_log). The height
/// must exceed 2.
double point_count_bound_log(const Int& deg_curve, double height_log, const BoundParams& params);

/// Smallest prime >= max(ell0, ceil((log B)^e)) with e the case exponent
/// (1/(4 gB gC) diagonal, 2/(g^2+g) parabolic, 2/((4g)^2+4g) fourth power).
/// Throws below_threshold_error when B is under the admissible B0.
unsigned long optimize_level(double log_B, const CoverCase& c, const BoundParams& params);

struct CaseEvaluation {
    unsigned long ell;
    double cover_deg_log;
    double lift_log;
    double bound_log;
};

/// Full chain for one case at the optimized level.
CaseEvaluation evaluate_case(double log_B, const CoverCase& c, const BoundParams& params);

/// bound of one case: the point-count bound of the lifted curve.
double s_bound_log(double log_B, const CoverCase& c, const BoundParams& params);

/// log-sum-exp over all cases of cover_cases(params.g).
double total_bound_log(double log_B, const BoundParams& params);

/// log of C (g^2 D log(2B))^{11 g^2}, the comparison curve.
double comparison_bound_log(double log_B, unsigned g, double C, double D);

/// "e123" -> 123 (natural-log space); otherwise parses a plain number B >= 1
/// and returns log(B).
double parse_log_height_bound(const std::string& text);

} // namespace nonsimple

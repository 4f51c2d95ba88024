#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsimple/poly.hpp"

namespace nonsimple {

/// Largest p^k the naive point counter will loop over.
inline constexpr unsigned long kPointCountBudget = 250000;

/// One-parameter family y^2 = f(x)(x - t) for a fixed squarefree f of even
/// degree 2g (g = 2 for the classifier; other degrees count-only).
struct FamilySpec {
    Poly f;
    std::string label;

    explicit FamilySpec(Poly f_coeffs, std::string name = "");
    unsigned genus() const { return static_cast<unsigned>(degree(f)) / 2; }
};

/// Integer model y^2 = F(x) with F squarefree of degree 3, 5 or 6.
/// Curves from specialize() record the parameter and the substitution scale v
/// of (X, Y) = (v x, v^3 y), so the model is Q-isomorphic to y^2 = f(x)(x-t).
struct GenusTwoCurve {
    Poly F;
    std::optional<Rat> param;
    Int denom_scale = 1;

    explicit GenusTwoCurve(Poly F_coeffs);
    const Int& disc() const { return disc_; }

  private:
    Int disc_;
};

/// Specializes the family at t. Throws degenerate_parameter_error when t is a
/// root of f (the fiber is not a smooth genus-2 curve).
GenusTwoCurve specialize(const FamilySpec& family, const Rat& t);

/// True iff p divides neither the leading coefficient nor disc(F). p must be
/// an odd prime; p = 2 is unsupported.
bool good_reduction(const GenusTwoCurve& curve, unsigned long p);

/// #C(F_{p^k}) of the smooth projective model, k = 1 or 2, by the quadratic
/// character sum. Requires good reduction and p^k within the loop budget.
unsigned long count_points(const GenusTwoCurve& curve, unsigned long p, int k);

/// Frobenius data of a genus-2 curve at an odd prime of good reduction.
/// P(T) = T^4 - c1 T^3 + c2 T^2 - p c1 T + p^2.
struct FrobeniusRecord {
    unsigned long p = 0;
    unsigned long N1 = 0;
    unsigned long N2 = 0;
    long long c1 = 0;
    long long c2 = 0;
};

/// Solves for (c1, c2) from the counts and validates the Weil bound, the
/// parity of c2 and P(1) > 0; violations throw internal_error (they signal a
/// counting bug, not bad input).
FrobeniusRecord frobenius_charpoly(unsigned long N1, unsigned long N2, unsigned long p);

/// Monic integer quartic T^4 + a3 T^3 + a2 T^2 + a1 T + a0.
struct Quartic {
    Int a3, a2, a1, a0;

    Int eval(const Int& t) const;
    bool operator==(const Quartic&) const = default;
    std::string str() const;
};

Quartic frobenius_quartic(const FrobeniusRecord& rec);

/// Power sums s_j = sum alpha_i^j of the roots of the Frobenius quartic,
/// j = 1..max_j, by the integer linear recurrence
/// s_j = c1 s_{j-1} - c2 s_{j-2} + p c1 s_{j-3} - p^2 s_{j-4}.
std::vector<Int> frobenius_power_sums(long long c1, long long c2, unsigned long p,
                                      unsigned max_j);

/// P_k(T) = prod (T - alpha_i^k), exact, via power sums and Newton's
/// identities. k = 1 returns the Frobenius quartic itself.
Quartic charpoly_power(long long c1, long long c2, unsigned long p, unsigned k);

} // namespace nonsimple

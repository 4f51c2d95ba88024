#include "nonsimple/igusa.hpp"

#include <array>

namespace nonsimple {

namespace {

// One monomial c * a0^e0 * ... * a6^e6 of an invariant, coefficients taken
// descending (a0 = x^6 coefficient). The tables are the classical integral
// formulas expanded from the root-difference definitions:
//   I2  = a0^2  sum over the 15 pair partitions        (ij)^2(kl)^2(mn)^2
//   I4  = a0^4  sum over the 10 two-triple partitions  tri^2 * tri^2
//   I6  = a0^6  sum over the 60 matched triple pairs   tri^2 tri^2 prod (x_i - x_sigma(i))^2
// with tri{i,j,k} = (x_i - x_j)(x_j - x_k)(x_k - x_i).
struct IgusaTerm {
    std::array<int, 7> e;
    long long c;
};

static const IgusaTerm kI2Terms[] = {
    {{1, 0, 0, 0, 0, 0, 1}, -240LL},
    {{0, 1, 0, 0, 0, 1, 0}, 40LL},
    {{0, 0, 1, 0, 1, 0, 0}, -16LL},
    {{0, 0, 0, 2, 0, 0, 0}, 6LL},
};

static const IgusaTerm kI4Terms[] = {
    {{2, 0, 0, 0, 0, 0, 2}, 1620LL},
    {{1, 1, 0, 0, 0, 1, 1}, -540LL},
    {{1, 0, 1, 0, 1, 0, 1}, -504LL},
    {{1, 0, 1, 0, 0, 2, 0}, 300LL},
    {{1, 0, 0, 2, 0, 0, 1}, 324LL},
    {{1, 0, 0, 1, 1, 1, 0}, -180LL},
    {{1, 0, 0, 0, 3, 0, 0}, 48LL},
    {{0, 2, 0, 0, 1, 0, 1}, 300LL},
    {{0, 2, 0, 0, 0, 2, 0}, -80LL},
    {{0, 1, 1, 1, 0, 0, 1}, -180LL},
    {{0, 1, 1, 0, 1, 1, 0}, 4LL},
    {{0, 1, 0, 2, 0, 1, 0}, 36LL},
    {{0, 1, 0, 1, 2, 0, 0}, -12LL},
    {{0, 0, 3, 0, 0, 0, 1}, 48LL},
    {{0, 0, 2, 1, 0, 1, 0}, -12LL},
    {{0, 0, 2, 0, 2, 0, 0}, 4LL},
};

static const IgusaTerm kI6Terms[] = {
    {{3, 0, 0, 0, 0, 0, 3}, -119880LL},
    {{2, 1, 0, 0, 0, 1, 2}, 59940LL},
    {{2, 0, 1, 0, 1, 0, 2}, 20664LL},
    {{2, 0, 1, 0, 0, 2, 1}, -18600LL},
    {{2, 0, 0, 2, 0, 0, 2}, -10044LL},
    {{2, 0, 0, 1, 1, 1, 1}, 3060LL},
    {{2, 0, 0, 1, 0, 3, 0}, 2250LL},
    {{2, 0, 0, 0, 3, 0, 1}, -96LL},
    {{2, 0, 0, 0, 2, 2, 0}, -900LL},
    {{1, 2, 0, 0, 1, 0, 2}, -18600LL},
    {{1, 2, 0, 0, 0, 2, 1}, -2240LL},
    {{1, 1, 1, 1, 0, 0, 2}, 3060LL},
    {{1, 1, 1, 0, 1, 1, 1}, 3472LL},
    {{1, 1, 1, 0, 0, 3, 0}, 1600LL},
    {{1, 1, 0, 2, 0, 1, 1}, 1818LL},
    {{1, 1, 0, 1, 2, 0, 1}, -876LL},
    {{1, 1, 0, 1, 1, 2, 0}, -1860LL},
    {{1, 1, 0, 0, 3, 1, 0}, 616LL},
    {{1, 0, 3, 0, 0, 0, 2}, -96LL},
    {{1, 0, 2, 1, 0, 1, 1}, -876LL},
    {{1, 0, 2, 0, 2, 0, 1}, 424LL},
    {{1, 0, 2, 0, 1, 2, 0}, -640LL},
    {{1, 0, 1, 2, 1, 0, 1}, -468LL},
    {{1, 0, 1, 2, 0, 2, 0}, 330LL},
    {{1, 0, 1, 1, 2, 1, 0}, 492LL},
    {{1, 0, 1, 0, 4, 0, 0}, -160LL},
    {{1, 0, 0, 4, 0, 0, 1}, 162LL},
    {{1, 0, 0, 3, 1, 1, 0}, -198LL},
    {{1, 0, 0, 2, 3, 0, 0}, 60LL},
    {{0, 3, 0, 1, 0, 0, 2}, 2250LL},
    {{0, 3, 0, 0, 1, 1, 1}, 1600LL},
    {{0, 3, 0, 0, 0, 3, 0}, -320LL},
    {{0, 2, 2, 0, 0, 0, 2}, -900LL},
    {{0, 2, 1, 1, 0, 1, 1}, -1860LL},
    {{0, 2, 1, 0, 2, 0, 1}, -640LL},
    {{0, 2, 1, 0, 1, 2, 0}, 64LL},
    {{0, 2, 0, 2, 1, 0, 1}, 330LL},
    {{0, 2, 0, 2, 0, 2, 0}, 176LL},
    {{0, 2, 0, 1, 2, 1, 0}, 26LL},
    {{0, 2, 0, 0, 4, 0, 0}, -36LL},
    {{0, 1, 3, 0, 0, 1, 1}, 616LL},
    {{0, 1, 2, 1, 1, 0, 1}, 492LL},
    {{0, 1, 2, 1, 0, 2, 0}, 26LL},
    {{0, 1, 2, 0, 2, 1, 0}, 28LL},
    {{0, 1, 1, 3, 0, 0, 1}, -198LL},
    {{0, 1, 1, 2, 1, 1, 0}, -238LL},
    {{0, 1, 1, 1, 3, 0, 0}, 76LL},
    {{0, 1, 0, 4, 0, 1, 0}, 72LL},
    {{0, 1, 0, 3, 2, 0, 0}, -24LL},
    {{0, 0, 4, 0, 1, 0, 1}, -160LL},
    {{0, 0, 4, 0, 0, 2, 0}, -36LL},
    {{0, 0, 3, 2, 0, 0, 1}, 60LL},
    {{0, 0, 3, 1, 1, 1, 0}, 76LL},
    {{0, 0, 3, 0, 3, 0, 0}, -24LL},
    {{0, 0, 2, 3, 0, 1, 0}, -24LL},
    {{0, 0, 2, 2, 2, 0, 0}, 8LL},
};

template <size_t N>
Int eval_terms(const IgusaTerm (&terms)[N], const std::array<Int, 7>& a) {
    Int total = 0;
    for (const IgusaTerm& t : terms) {
        Int v(static_cast<long>(t.c));
        for (int i = 0; i < 7; ++i)
            for (int e = 0; e < t.e[i]; ++e)
                v *= a[i];
        total += v;
    }
    return total;
}

// sextic coefficients descending: a[0] x^6 + ... + a[6]; a[0] = 0 for quintics
std::array<Int, 7> descending_sextic(const Poly& F) {
    std::array<Int, 7> a;
    for (int i = 0; i <= 6; ++i) {
        int src = 6 - i;
        a[i] = (src < static_cast<int>(F.size())) ? F[src] : Int(0);
    }
    return a;
}

} // namespace

IgusaInvariants igusa_invariants(const GenusTwoCurve& curve) {
    const int d = degree(curve.F);
    if (d != 5 && d != 6)
        throw invalid_input_error("igusa_invariants: model degree must be 5 or 6");
    auto a = descending_sextic(curve.F);
    IgusaInvariants inv;
    inv.I2 = eval_terms(kI2Terms, a);
    inv.I4 = eval_terms(kI4Terms, a);
    inv.I6 = eval_terms(kI6Terms, a);
    // I10 is disc of the binary sextic: for a quintic model the infinity root
    // contributes Res(z, g)^2 = lc^2, so I10 = lc^2 * disc_5.
    Int lc = leading_coeff(curve.F);
    inv.I10 = (d == 6) ? curve.disc() : Int(lc * lc * curve.disc());
    if (inv.I10 == 0)
        throw invalid_input_error("igusa_invariants: I10 = 0 (non-squarefree model)");
    inv.I12 = inv.I2 * inv.I10;
    inv.I6prime = Rat(inv.I2 * inv.I4 - 3 * inv.I6, Int(2));
    inv.j1 = Rat(inv.I4) * inv.I6prime / Rat(inv.I10);
    inv.j2 = Rat(inv.I2 * inv.I4 * inv.I4, inv.I10);
    inv.j3 = Rat(inv.I4 * inv.I4 * inv.I4 * inv.I4 * inv.I4, inv.I10 * inv.I10);
    return inv;
}

Int j_height(const GenusTwoCurve& curve) {
    IgusaInvariants inv = igusa_invariants(curve);
    return proj_height(ProjPoint({inv.j1, inv.j2, inv.j3, Rat(1L)}));
}

} // namespace nonsimple

#include "nonsimple/hyperelliptic.hpp"

#include <cstdint>

#include "nonsimple/primes.hpp"

namespace nonsimple {

FamilySpec::FamilySpec(Poly f_coeffs, std::string name)
    : f(trimmed(std::move(f_coeffs))), label(std::move(name)) {
    int d = degree(f);
    if (d < 2 || d % 2 != 0)
        throw invalid_input_error("FamilySpec: f must have even degree 2g >= 2");
    if (!squarefree_over_Q(f))
        throw invalid_input_error("FamilySpec: f must be squarefree");
}

GenusTwoCurve::GenusTwoCurve(Poly F_coeffs) : F(trimmed(std::move(F_coeffs))) {
    int d = degree(F);
    if (d != 3 && d != 5 && d != 6)
        throw invalid_input_error("GenusTwoCurve: degree must be 3, 5 or 6");
    disc_ = discriminant(F);
    if (disc_ == 0)
        throw invalid_input_error("GenusTwoCurve: F must be squarefree");
}

GenusTwoCurve specialize(const FamilySpec& family, const Rat& t) {
    if (eval_at(family.f, t).is_zero())
        throw degenerate_parameter_error("specialize: t is a root of f, fiber degenerates");
    const Int u = t.num();
    const Int v = t.den();
    const int df = degree(family.f);
    // f_v(X) = v^{2g} f(X/v): coefficient of X^i picks up v^{2g-i}.
    Poly fv(df + 1, Int(0));
    Int vpow = 1;
    for (int i = df; i >= 0; --i) {
        fv[i] = family.f[i] * vpow;
        vpow *= v;
    }
    // Y^2 = v * f_v(X) * (X - u) under (X, Y) = (v x, v^3 y).
    Poly linear = {-u, Int(1)};
    Poly F = mul(fv, linear);
    for (Int& c : F)
        c *= v;
    GenusTwoCurve curve(std::move(F));
    curve.param = t;
    curve.denom_scale = v;
    return curve;
}

bool good_reduction(const GenusTwoCurve& curve, unsigned long p) {
    if (p < 3 || !is_prime(p))
        throw invalid_input_error("good_reduction: p must be an odd prime");
    if (mpz_divisible_ui_p(leading_coeff(curve.F).get_mpz_t(), p))
        return false;
    return !mpz_divisible_ui_p(curve.disc().get_mpz_t(), p);
}

namespace {

// F mod p with nonnegative residues, ascending.
std::vector<unsigned long> reduce_mod(const Poly& F, unsigned long p) {
    std::vector<unsigned long> c;
    c.reserve(F.size());
    for (const Int& a : F)
        c.push_back(mpz_fdiv_ui(a.get_mpz_t(), p));
    return c;
}

unsigned long count_points_fp(const std::vector<unsigned long>& c, unsigned long p, int deg) {
    std::vector<uint8_t> is_sq(p, 0);
    for (unsigned long y = 0; y < p; ++y)
        is_sq[(y * y) % p] = 1;
    unsigned long total = 0;
    for (unsigned long x = 0; x < p; ++x) {
        unsigned long v = 0;
        for (size_t i = c.size(); i-- > 0;)
            v = (v * x + c[i]) % p;
        if (v == 0)
            total += 1;
        else if (is_sq[v])
            total += 2;
    }
    if (deg != 6)
        return total + 1; // one point at infinity for odd degree
    return total + (is_sq[c[6]] ? 2 : 0);
}

struct Fp2 {
    unsigned long p;
    unsigned long r; // smallest quadratic non-residue; F_{p^2} = F_p[w]/(w^2 - r)

    unsigned long idx(unsigned long a, unsigned long b) const { return a * p + b; }

    // (a + b w)(c + d w) = (ac + bd r) + (ad + bc) w; safe when outputs alias inputs
    void mul(unsigned long a, unsigned long b, unsigned long c, unsigned long d,
             unsigned long& ra, unsigned long& rb) const {
        unsigned long na = (a * c + b * d % p * r) % p;
        unsigned long nb = (a * d + b * c) % p;
        ra = na;
        rb = nb;
    }
};

unsigned long count_points_fp2(const std::vector<unsigned long>& c, unsigned long p, int deg) {
    std::vector<uint8_t> is_sq_fp(p, 0);
    for (unsigned long y = 0; y < p; ++y)
        is_sq_fp[(y * y) % p] = 1;
    unsigned long r = 2;
    while (r < p && is_sq_fp[r])
        ++r;
    Fp2 k{p, r};

    const unsigned long n = p * p;
    std::vector<uint8_t> is_sq(n, 0);
    for (unsigned long a = 0; a < p; ++a)
        for (unsigned long b = 0; b < p; ++b) {
            unsigned long sa, sb;
            k.mul(a, b, a, b, sa, sb);
            is_sq[k.idx(sa, sb)] = 1;
        }

    unsigned long total = 0;
    for (unsigned long xa = 0; xa < p; ++xa)
        for (unsigned long xb = 0; xb < p; ++xb) {
            unsigned long va = 0, vb = 0;
            for (size_t i = c.size(); i-- > 0;) {
                k.mul(va, vb, xa, xb, va, vb);
                va = (va + c[i]) % p;
            }
            if (va == 0 && vb == 0)
                total += 1;
            else if (is_sq[k.idx(va, vb)])
                total += 2;
        }
    if (deg != 6)
        return total + 1;
    // every F_p scalar is a square in F_{p^2}, so this is always 2
    return total + (is_sq[k.idx(c[6], 0)] ? 2 : 0);
}

} // namespace

unsigned long count_points(const GenusTwoCurve& curve, unsigned long p, int k) {
    if (k != 1 && k != 2)
        throw invalid_input_error("count_points: k must be 1 or 2");
    if (!good_reduction(curve, p))
        throw invalid_input_error("count_points: bad reduction at p");
    unsigned long q = (k == 1) ? p : p * p;
    if (q > kPointCountBudget)
        throw resource_limit_error("count_points: p^k exceeds the loop budget");
    auto c = reduce_mod(curve.F, p);
    int deg = degree(curve.F);
    return (k == 1) ? count_points_fp(c, p, deg) : count_points_fp2(c, p, deg);
}

FrobeniusRecord frobenius_charpoly(unsigned long N1, unsigned long N2, unsigned long p) {
    const long long pp = static_cast<long long>(p);
    const long long c1 = pp + 1 - static_cast<long long>(N1);
    if (c1 * c1 > 16 * pp)
        throw internal_error("frobenius_charpoly: Weil bound violated (counting bug)");
    const long long s2 = pp * pp + 1 - static_cast<long long>(N2);
    const long long twice_c2 = c1 * c1 - s2;
    if (twice_c2 % 2 != 0)
        throw internal_error("frobenius_charpoly: parity failure (counting bug)");
    const long long c2 = twice_c2 / 2;
    // P(1) = #Jac(F_p) must be positive
    if (1 - c1 + c2 - pp * c1 + pp * pp <= 0)
        throw internal_error("frobenius_charpoly: non-positive Jacobian order");
    return FrobeniusRecord{p, N1, N2, c1, c2};
}

Int Quartic::eval(const Int& t) const {
    return (((t + a3) * t + a2) * t + a1) * t + a0;
}

std::string Quartic::str() const {
    return "T^4 + (" + a3.get_str() + ")T^3 + (" + a2.get_str() + ")T^2 + (" +
           a1.get_str() + ")T + (" + a0.get_str() + ")";
}

Quartic frobenius_quartic(const FrobeniusRecord& rec) {
    const long long pp = static_cast<long long>(rec.p);
    return Quartic{Int(static_cast<long>(-rec.c1)), Int(static_cast<long>(rec.c2)),
                   Int(static_cast<long>(-pp * rec.c1)), Int(static_cast<long>(pp)) * Int(static_cast<long>(pp))};
}

std::vector<Int> frobenius_power_sums(long long c1, long long c2, unsigned long p,
                                      unsigned max_j) {
    const Int C1(static_cast<long>(c1)), C2(static_cast<long>(c2)), P(static_cast<long>(p));
    const Int PC1 = P * C1, P2 = P * P;
    std::vector<Int> s(max_j + 1, Int(0));
    if (max_j >= 1)
        s[1] = C1;
    if (max_j >= 2)
        s[2] = C1 * s[1] - 2 * C2;
    if (max_j >= 3)
        s[3] = C1 * s[2] - C2 * s[1] + 3 * PC1;
    if (max_j >= 4)
        s[4] = C1 * s[3] - C2 * s[2] + PC1 * s[1] - 4 * P2;
    for (unsigned j = 5; j <= max_j; ++j)
        s[j] = C1 * s[j - 1] - C2 * s[j - 2] + PC1 * s[j - 3] - P2 * s[j - 4];
    return s;
}

Quartic charpoly_power(long long c1, long long c2, unsigned long p, unsigned k) {
    if (k == 0)
        throw invalid_input_error("charpoly_power: k must be >= 1");
    auto s = frobenius_power_sums(c1, c2, p, 4 * k);
    const Int& q1 = s[k];
    const Int& q2 = s[2 * k];
    const Int& q3 = s[3 * k];
    const Int& q4 = s[4 * k];
    auto exact_div = [](const Int& num, long d) {
        if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(d)))
            throw internal_error("charpoly_power: Newton identity division not exact");
        Int out;
        mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d));
        return out;
    };
    Int e1 = q1;
    Int e2 = exact_div(e1 * q1 - q2, 2);
    Int e3 = exact_div(e2 * q1 - e1 * q2 + q3, 3);
    Int e4 = exact_div(e3 * q1 - e2 * q2 + e1 * q3 - q4, 4);
    return Quartic{-e1, e2, -e3, e4};
}

} // namespace nonsimple

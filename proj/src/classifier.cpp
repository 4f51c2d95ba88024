#include "nonsimple/classifier.hpp"

#include <algorithm>

#include "nonsimple/primes.hpp"

namespace nonsimple {

bool is_ordinary(long long c2, unsigned long p) {
    if (c2 == 0)
        return false;
    long long m = c2 % static_cast<long long>(p);
    return m != 0;
}

std::vector<unsigned> default_k_test() {
    std::vector<unsigned> ks;
    for (unsigned k = 2; k <= 60; ++k)
        ks.push_back(k);
    return ks;
}

namespace {

// All positive divisors of |n|, n != 0. Trial division up to 10^6 plus a
// primality check on the cofactor covers every constant term this toolkit
// produces (Frobenius constants are p^{2k}).
std::vector<Int> positive_divisors(const Int& n) {
    Int m = abs(n);
    std::vector<std::pair<Int, unsigned>> fact;
    for (unsigned long d = 2; d <= 1000000; d = (d == 2 ? 3 : d + 2)) {
        // once m fits a word, stop at d > sqrt(m); above a word d*d < m anyway
        if (mpz_fits_ulong_p(m.get_mpz_t()) && d > mpz_get_ui(m.get_mpz_t()) / d)
            break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), d))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        fact.emplace_back(Int(d), e);
    }
    if (m > 1) {
        if (!mpz_probab_prime_p(m.get_mpz_t(), 40))
            throw resource_limit_error("quartic_irreducible: constant term too hard to factor");
        fact.emplace_back(m, 1);
    }
    std::vector<Int> divs = {Int(1)};
    for (const auto& [prime, mult] : fact) {
        const size_t base = divs.size();
        Int pw = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pw *= prime;
            for (size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pw);
        }
    }
    if (divs.size() > 200000)
        throw resource_limit_error("quartic_irreducible: divisor explosion");
    return divs;
}

// (T^2 + aT + b)(T^2 + cT + d) matches P iff a + c = a3, ac = a2 - b - d,
// ad + bc = a1, bd = a0. With (b, d) fixed, a is pinned by linear elimination.
bool splits_with_pair(const Quartic& P, const Int& b, const Int& d) {
    if (b == d) {
        if (b * P.a3 != P.a1)
            return false;
        Int disc = P.a3 * P.a3 - 4 * (P.a2 - 2 * b);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
            return false;
        return true; // a3 and sqrt(disc) share parity automatically
    }
    Int num = P.a1 - b * P.a3;
    Int den = d - b;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        return false;
    Int a;
    mpz_divexact(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int c = P.a3 - a;
    return a * c == P.a2 - b - d;
}

} // namespace

namespace {

// fast sound rejection: a value nonzero mod q cannot be zero
struct ModularRootFilter {
    static constexpr unsigned long q = 2305843009213693951ull; // 2^61 - 1
    unsigned long a3, a2, a1, a0;

    explicit ModularRootFilter(const Quartic& P)
        : a3(mpz_fdiv_ui(P.a3.get_mpz_t(), q)), a2(mpz_fdiv_ui(P.a2.get_mpz_t(), q)),
          a1(mpz_fdiv_ui(P.a1.get_mpz_t(), q)), a0(mpz_fdiv_ui(P.a0.get_mpz_t(), q)) {}

    bool maybe_root(const Int& z) const {
        unsigned long zq = mpz_fdiv_ui(z.get_mpz_t(), q);
        auto mul = [](unsigned long a, unsigned long b) {
            return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % q);
        };
        unsigned long v = (zq + a3) % q;
        v = (mul(v, zq) + a2) % q;
        v = (mul(v, zq) + a1) % q;
        v = (mul(v, zq) + a0) % q;
        return v == 0;
    }
};

} // namespace

bool quartic_irreducible(const Quartic& P) {
    if (P.a0 == 0)
        return false; // T divides P
    auto divs = positive_divisors(P.a0);
    ModularRootFilter filter(P);
    for (const Int& dv : divs) {
        if (filter.maybe_root(dv) && P.eval(dv) == 0)
            return false;
        Int neg = -dv;
        if (filter.maybe_root(neg) && P.eval(neg) == 0)
            return false;
    }
    for (const Int& dv : divs) {
        for (int sign = 0; sign < 2; ++sign) {
            Int b = sign ? Int(-dv) : dv;
            Int d;
            mpz_divexact(d.get_mpz_t(), P.a0.get_mpz_t(), b.get_mpz_t());
            if (splits_with_pair(P, b, d))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<unsigned> checked_ks(const std::vector<unsigned>& k_test) {
    std::vector<unsigned> ks = k_test;
    ks.push_back(1);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (!ks.empty() && ks.front() == 0)
        throw invalid_input_error("k_test: k must be >= 1");
    return ks;
}

std::optional<Certificate> certificate_from_record(const FrobeniusRecord& rec,
                                                   const std::vector<unsigned>& ks) {
    if (!is_ordinary(rec.c2, rec.p))
        return std::nullopt;
    for (unsigned k : ks) {
        if (!quartic_irreducible(charpoly_power(rec.c1, rec.c2, rec.p, k)))
            return std::nullopt;
    }
    return Certificate{rec.p, rec.c1, rec.c2, ks};
}

} // namespace

std::optional<Certificate> certify_geometrically_simple(const GenusTwoCurve& curve,
                                                        unsigned long p,
                                                        const std::vector<unsigned>& k_test) {
    if (degree(curve.F) < 5)
        throw invalid_input_error("certify: the certificate is for genus-2 models only");
    if (!good_reduction(curve, p))
        return std::nullopt;
    auto ks = checked_ks(k_test);
    unsigned long N1 = count_points(curve, p, 1);
    unsigned long N2 = count_points(curve, p, 2);
    return certificate_from_record(frobenius_charpoly(N1, N2, p), ks);
}

Classification classify_parameter(const FamilySpec& family, const Rat& t,
                                  unsigned long P_max,
                                  const std::vector<unsigned>& k_test) {
    if (P_max < 3)
        throw invalid_input_error("classify_parameter: P_max must be >= 3");
    if (family.genus() != 2)
        throw invalid_input_error("classify_parameter: classification needs a genus-2 family");
    Classification out;
    if (eval_at(family.f, t).is_zero()) {
        out.status = Classification::Status::degenerate;
        return out;
    }
    GenusTwoCurve curve = specialize(family, t);
    auto ks = checked_ks(k_test);
    for (unsigned long p = 3; p <= P_max; p = next_prime_at_least(p + 2)) {
        ++out.primes_tested;
        if (!good_reduction(curve, p))
            continue;
        unsigned long N1 = count_points(curve, p, 1);
        unsigned long N2 = count_points(curve, p, 2);
        FrobeniusRecord rec = frobenius_charpoly(N1, N2, p);
        out.records.push_back(rec);
        if (auto cert = certificate_from_record(rec, ks)) {
            out.status = Classification::Status::certified_simple;
            out.certificate = std::move(cert);
            return out;
        }
    }
    out.status = Classification::Status::candidate_non_simple;
    return out;
}

} // namespace nonsimple

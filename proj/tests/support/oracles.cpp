#include "support/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "nonsimple/primes.hpp"

namespace nonsimple::oracle {

namespace {

unsigned long mod_reduce(const Int& a, unsigned long p) {
    return mpz_fdiv_ui(a.get_mpz_t(), p);
}

std::vector<unsigned long> poly_mod(const Poly& F, unsigned long p) {
    std::vector<unsigned long> c;
    for (const Int& a : F)
        c.push_back(mod_reduce(a, p));
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

unsigned long eval_mod(const std::vector<unsigned long>& c, unsigned long x, unsigned long p) {
    unsigned long v = 0;
    for (size_t i = c.size(); i-- > 0;)
        v = (v * x + c[i]) % p;
    return v;
}

} // namespace

unsigned long naive_point_count(const Poly& F, unsigned long p, int k) {
    auto c = poly_mod(F, p);
    int deg = static_cast<int>(c.size()) - 1;
    unsigned long count = 0;
    if (k == 1) {
        for (unsigned long x = 0; x < p; ++x) {
            unsigned long fx = eval_mod(c, x, p);
            for (unsigned long y = 0; y < p; ++y)
                if ((y * y) % p == fx)
                    ++count;
        }
        if (deg % 2 == 1) {
            count += 1;
        } else {
            for (unsigned long y = 0; y < p; ++y)
                if ((y * y) % p == c.back())
                    ++count;
        }
        return count;
    }
    // F_{p^2} as F_p[w]/(w^2 + bw + c0): scan for an irreducible quadratic
    unsigned long ib = 0, ic = 0;
    bool found = false;
    for (unsigned long b = 0; b < p && !found; ++b)
        for (unsigned long c0 = 1; c0 < p && !found; ++c0) {
            bool has_root = false;
            for (unsigned long x = 0; x < p; ++x)
                if ((x * x + b * x + c0) % p == 0) {
                    has_root = true;
                    break;
                }
            if (!has_root) {
                ib = b;
                ic = c0;
                found = true;
            }
        }
    // (a1 + a2 w)(b1 + b2 w) with w^2 = -ib w - ic
    auto fmul = [&](unsigned long a1, unsigned long a2, unsigned long b1, unsigned long b2) {
        unsigned long hi = a2 * b2 % p; // coefficient of w^2
        unsigned long lo = (a1 * b1 + (p - ic) * hi) % p;
        unsigned long mid = (a1 * b2 + a2 * b1 + (p - ib) * hi) % p;
        return std::pair<unsigned long, unsigned long>(lo, mid);
    };
    auto feval = [&](unsigned long x1, unsigned long x2) {
        std::pair<unsigned long, unsigned long> acc{0, 0};
        for (size_t i = c.size(); i-- > 0;) {
            acc = fmul(acc.first, acc.second, x1, x2);
            acc.first = (acc.first + c[i]) % p;
        }
        return acc;
    };
    for (unsigned long x1 = 0; x1 < p; ++x1)
        for (unsigned long x2 = 0; x2 < p; ++x2) {
            auto fx = feval(x1, x2);
            for (unsigned long y1 = 0; y1 < p; ++y1)
                for (unsigned long y2 = 0; y2 < p; ++y2)
                    if (fmul(y1, y2, y1, y2) == fx)
                        ++count;
        }
    if (deg % 2 == 1) {
        count += 1;
    } else {
        std::pair<unsigned long, unsigned long> lead{c.back(), 0};
        for (unsigned long y1 = 0; y1 < p; ++y1)
            for (unsigned long y2 = 0; y2 < p; ++y2)
                if (fmul(y1, y2, y1, y2) == lead)
                    ++count;
    }
    return count;
}

unsigned long jacobian_order_by_enumeration(const Poly& F, unsigned long p) {
    auto c = poly_mod(F, p);
    if (c.size() != 6)
        throw std::logic_error("jacobian oracle expects a degree-5 model");
    unsigned long count = 1; // the identity class, u = 1
    for (unsigned long a = 0; a < p; ++a) {
        unsigned long fa = eval_mod(c, a, p);
        for (unsigned long v = 0; v < p; ++v)
            if ((v * v) % p == fa)
                ++count;
    }
    // u = x^2 + bx + c0, v = v1 x + v0; u | v^2 - F
    // x^2 = -b x - c0 reduces any polynomial; precompute x^j mod u for j <= 5
    for (unsigned long b = 0; b < p; ++b)
        for (unsigned long c0 = 0; c0 < p; ++c0) {
            unsigned long r1[6], r0[6]; // x^j = r1[j] x + r0[j] (mod u)
            r1[0] = 0;
            r0[0] = 1;
            r1[1] = 1;
            r0[1] = 0;
            for (int j = 2; j <= 5; ++j) {
                // x^j = x * x^{j-1} = r1 x^2 + r0 x
                unsigned long hi = r1[j - 1], lo = r0[j - 1];
                r1[j] = (lo + (p - b) * hi) % p;
                r0[j] = (p - c0) * hi % p;
            }
            unsigned long F1 = 0, F0 = 0; // F mod u
            for (int j = 0; j <= 5; ++j) {
                F1 = (F1 + c[j] * r1[j]) % p;
                F0 = (F0 + c[j] * r0[j]) % p;
            }
            for (unsigned long v1 = 0; v1 < p; ++v1)
                for (unsigned long v0 = 0; v0 < p; ++v0) {
                    // v^2 mod u = v1^2 x^2 + 2 v1 v0 x + v0^2
                    unsigned long s = v1 * v1 % p;
                    unsigned long t1 = (2 * v1 * v0 % p + (p - b) * s) % p;
                    unsigned long t0 = (v0 * v0 + (p - c0) * s) % p;
                    if (t1 == F1 && t0 == F0)
                        ++count;
                }
        }
    return count;
}

namespace {

std::vector<Int> signed_divisors(const Int& n) {
    std::vector<Int> divs;
    Int m = abs(n);
    Int rest = m;
    std::vector<std::pair<Int, unsigned>> fact;
    for (unsigned long d = 2;; d = (d == 2 ? 3 : d + 2)) {
        if (mpz_fits_ulong_p(rest.get_mpz_t())) {
            unsigned long ru = mpz_get_ui(rest.get_mpz_t());
            if (d > ru / d)
                break;
        }
        if (d > 2000000)
            break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), d))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++e;
        }
        fact.emplace_back(Int(d), e);
    }
    if (rest > 1)
        fact.emplace_back(rest, 1);
    std::vector<Int> pos = {Int(1)};
    for (auto& [prime, mult] : fact) {
        size_t base = pos.size();
        Int pw = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pw *= prime;
            for (size_t i = 0; i < base; ++i)
                pos.push_back(pos[i] * pw);
        }
    }
    for (const Int& d : pos) {
        divs.push_back(d);
        divs.push_back(-d);
    }
    return divs;
}

} // namespace

bool quartic_reducible_bruteforce(const Quartic& P) {
    if (P.a0 == 0)
        return true;
    auto divs = signed_divisors(P.a0);
    // linear factor: evaluate at every candidate root, with a sound modular
    // rejection (nonzero mod q implies nonzero) to skip hopeless candidates
    constexpr unsigned long q = 4611686018427387847ull; // prime near 2^62
    auto residue = [&](const Int& x) { return mpz_fdiv_ui(x.get_mpz_t(), q); };
    unsigned long m3 = residue(P.a3), m2 = residue(P.a2), m1 = residue(P.a1),
                  m0 = residue(P.a0);
    for (const Int& z : divs) {
        unsigned long zq = residue(z);
        auto mul = [](unsigned long a, unsigned long b) {
            return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % q);
        };
        unsigned long r = (zq + m3) % q;
        r = (mul(r, zq) + m2) % q;
        r = (mul(r, zq) + m1) % q;
        r = (mul(r, zq) + m0) % q;
        if (r != 0)
            continue;
        Int v = z * z * z * z + P.a3 * z * z * z + P.a2 * z * z + P.a1 * z + P.a0;
        if (v == 0)
            return true;
    }
    // quadratic split via the discriminant route
    for (const Int& b : divs) {
        if (!mpz_divisible_p(P.a0.get_mpz_t(), b.get_mpz_t()))
            continue;
        Int d;
        mpz_divexact(d.get_mpz_t(), P.a0.get_mpz_t(), b.get_mpz_t());
        Int disc = P.a3 * P.a3 - 4 * (P.a2 - b - d);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
            continue;
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        for (int sign = -1; sign <= 1; sign += 2) {
            Int twice_a = P.a3 + sign * s;
            if (!mpz_divisible_ui_p(twice_a.get_mpz_t(), 2))
                continue;
            Int a = twice_a / 2;
            Int c = P.a3 - a;
            if (a * d + b * c == P.a1 && a * c == P.a2 - b - d && b * d == P.a0)
                return true;
        }
    }
    return false;
}

std::vector<Rat> rationals_by_double_loop(unsigned long B) {
    std::vector<Rat> out;
    for (long a = -static_cast<long>(B); a <= static_cast<long>(B); ++a)
        for (unsigned long b = 1; b <= B; ++b) {
            unsigned long aa = static_cast<unsigned long>(a < 0 ? -a : a);
            if (std::gcd(aa, b) != 1)
                continue;
            if (std::max(aa, b) > B)
                continue;
            out.emplace_back(Int(a), Int(b));
        }
    return out;
}

unsigned long sp_order_by_matrix_enumeration(unsigned g, unsigned long ell) {
    const unsigned n = 2 * g;
    const unsigned cells = n * n;
    double total_d = std::pow(static_cast<double>(ell), static_cast<double>(cells));
    if (total_d > (1 << 26))
        throw std::logic_error("sp matrix enumeration too large");
    unsigned long total = 1;
    for (unsigned i = 0; i < cells; ++i)
        total *= ell;
    // J: <e_i, e_{g+i}> = 1
    auto J = [&](unsigned r, unsigned c) -> long {
        if (c == r + g)
            return 1;
        if (r == c + g)
            return -1;
        return 0;
    };
    std::vector<unsigned long> m(cells);
    unsigned long count = 0;
    for (unsigned long code = 0; code < total; ++code) {
        unsigned long t = code;
        for (unsigned i = 0; i < cells; ++i) {
            m[i] = t % ell;
            t /= ell;
        }
        bool ok = true;
        for (unsigned a = 0; a < n && ok; ++a)
            for (unsigned b = 0; b < n && ok; ++b) {
                long acc = 0;
                for (unsigned r = 0; r < n; ++r)
                    for (unsigned c = 0; c < n; ++c) {
                        long j = J(r, c);
                        if (j)
                            acc += j * static_cast<long>(m[r * n + a]) *
                                   static_cast<long>(m[c * n + b]);
                    }
                long want = J(a, b);
                long e = static_cast<long>(ell);
                if (((acc - want) % e + e) % e != 0)
                    ok = false;
            }
        if (ok)
            ++count;
    }
    return count;
}

unsigned long isotropic_subspaces_by_enumeration(unsigned g, unsigned long ell, unsigned k) {
    const unsigned n = 2 * g;
    unsigned long q = 1;
    for (unsigned i = 0; i < n; ++i)
        q *= ell; // ell^n vectors
    auto decode = [&](unsigned long idx) {
        std::vector<unsigned long> v(n);
        for (unsigned i = 0; i < n; ++i) {
            v[i] = idx % ell;
            idx /= ell;
        }
        return v;
    };
    auto pair_form = [&](const std::vector<unsigned long>& u, const std::vector<unsigned long>& v) {
        long acc = 0;
        for (unsigned i = 0; i < g; ++i)
            acc += static_cast<long>(u[i]) * static_cast<long>(v[g + i]) -
                   static_cast<long>(u[g + i]) * static_cast<long>(v[i]);
        long e = static_cast<long>(ell);
        return ((acc % e) + e) % e;
    };
    // canonical form: sorted list of all member indices of the subspace
    std::set<std::vector<unsigned long>> seen;
    std::vector<unsigned long> tuple(k);
    // iterate over all ordered k-tuples of nonzero vectors
    unsigned long count_tuples = 1;
    for (unsigned i = 0; i < k; ++i)
        count_tuples *= q;
    for (unsigned long code = 0; code < count_tuples; ++code) {
        unsigned long t = code;
        for (unsigned i = 0; i < k; ++i) {
            tuple[i] = t % q;
            t /= q;
        }
        bool nonzero = std::all_of(tuple.begin(), tuple.end(),
                                   [](unsigned long v) { return v != 0; });
        if (!nonzero)
            continue;
        // span
        std::set<unsigned long> span = {0};
        std::vector<std::vector<unsigned long>> vecs;
        for (unsigned long idx : tuple)
            vecs.push_back(decode(idx));
        std::vector<unsigned long> coeff(k, 0);
        bool done = false;
        while (!done) {
            std::vector<unsigned long> acc(n, 0);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < n; ++j)
                    acc[j] = (acc[j] + coeff[i] * vecs[i][j]) % ell;
            unsigned long enc = 0;
            for (unsigned j = n; j-- > 0;)
                enc = enc * ell + acc[j];
            span.insert(enc);
            unsigned pos = 0;
            while (pos < k) {
                if (++coeff[pos] < ell)
                    break;
                coeff[pos] = 0;
                ++pos;
            }
            done = pos == k;
        }
        unsigned long dim_size = 1;
        for (unsigned i = 0; i < k; ++i)
            dim_size *= ell;
        if (span.size() != dim_size)
            continue; // not independent
        bool isotropic = true;
        for (auto it = span.begin(); it != span.end() && isotropic; ++it)
            for (auto jt = it; jt != span.end() && isotropic; ++jt)
                if (pair_form(decode(*it), decode(*jt)) != 0)
                    isotropic = false;
        if (!isotropic)
            continue;
        seen.insert(std::vector<unsigned long>(span.begin(), span.end()));
    }
    return seen.size();
}

unsigned long isotropic_subgroups_by_pair_spans(const SympModule& M, unsigned long order) {
    const unsigned long n = M.size();
    std::set<std::vector<uint32_t>> seen;
    for (unsigned long a = 0; a < n; ++a)
        for (unsigned long b = a; b < n; ++b) {
            auto va = M.decode(a), vb = M.decode(b);
            // span of {va, vb}
            std::set<uint32_t> span;
            unsigned long qa = M.modulus(), qb = M.modulus();
            for (unsigned long i = 0; i < qa; ++i) {
                auto vi = M.scalar_mul(i, va);
                for (unsigned long j = 0; j < qb; ++j)
                    span.insert(static_cast<uint32_t>(M.encode(M.add(vi, M.scalar_mul(j, vb)))));
            }
            if (span.size() != order)
                continue;
            bool isotropic = true;
            std::vector<uint32_t> members(span.begin(), span.end());
            for (size_t i = 0; i < members.size() && isotropic; ++i)
                for (size_t j = i; j < members.size() && isotropic; ++j)
                    if (M.pairing(M.decode(members[i]), M.decode(members[j])) != 0)
                        isotropic = false;
            if (isotropic)
                seen.insert(members);
        }
    return seen.size();
}

namespace {

// Upper-triangular row-HNF bases: pivot d_i > 0 at (i, i), entries above a
// pivot reduced mod that pivot. A finite-index lattice has exactly one such
// basis, so counting filtered HNFs needs no deduplication.
struct HnfEnumerator {
    unsigned n = 0, g = 0;
    unsigned long ell = 2, q = 1, target_index = 1;
    unsigned long count = 0;
    std::vector<std::vector<long>> H; // rows are the basis vectors

    // q e_j must lie in the row span; solve left to right by exact division
    bool contains_q_scaled_units() const {
        for (unsigned j = 0; j < n; ++j) {
            std::vector<long> v(n, 0);
            v[j] = static_cast<long>(q);
            for (unsigned i = 0; i < n; ++i) {
                if (v[i] % H[i][i] != 0)
                    return false;
                long c = v[i] / H[i][i];
                if (c)
                    for (unsigned k = i; k < n; ++k)
                        v[k] -= c * H[i][k];
            }
        }
        return true;
    }

    bool rows_pairwise_isotropic() const {
        long m = static_cast<long>(q);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b) {
                long acc = 0;
                for (unsigned i = 0; i < g; ++i)
                    acc += H[a][i] * H[b][g + i] - H[a][g + i] * H[b][i];
                if (((acc % m) + m) % m != 0)
                    return false;
            }
        return true;
    }

    void choose_pivot(unsigned col, unsigned long index_left) {
        if (col == n) {
            if (index_left == 1 && contains_q_scaled_units() && rows_pairwise_isotropic())
                ++count;
            return;
        }
        for (unsigned long d = 1; d <= q; d *= ell) {
            if (index_left % d != 0)
                break; // ascending powers: once divisibility fails it stays failed
            H[col][col] = static_cast<long>(d);
            choose_entries(col, 0, index_left / d);
            if (d == q)
                break;
        }
        H[col][col] = 1;
    }

    void choose_entries(unsigned col, unsigned row, unsigned long index_left) {
        if (row == col) {
            choose_pivot(col + 1, index_left);
            return;
        }
        for (long v = 0; v < H[col][col]; ++v) {
            H[row][col] = v;
            choose_entries(col, row + 1, index_left);
        }
        H[row][col] = 0;
    }
};

} // namespace

unsigned long lagrangians_by_hnf(unsigned g, unsigned long ell, unsigned m) {
    HnfEnumerator e;
    e.n = 2 * g;
    e.g = g;
    e.ell = ell;
    for (unsigned i = 0; i < m; ++i)
        e.q *= ell;
    for (unsigned i = 0; i < m * g; ++i)
        e.target_index *= ell;
    e.H.assign(e.n, std::vector<long>(e.n, 0));
    for (unsigned i = 0; i < e.n; ++i)
        e.H[i][i] = 1;
    e.choose_pivot(0, e.target_index);
    return e.count;
}

namespace {

struct SplitSample {
    unsigned long p;
    unsigned long lead;
    std::vector<unsigned long> roots; // 6 distinct roots of the sextic mod p
};

// I2/I4/I6/I10 from the root-difference definitions, mod p.
void sums_mod_p(const SplitSample& s, unsigned long& A, unsigned long& B, unsigned long& C,
                unsigned long& D) {
    const unsigned long p = s.p;
    const auto& r = s.roots;
    auto dif = [&](int i, int j) { return (r[i] + p - r[j]) % p; };
    auto sq = [&](unsigned long x) { return x * x % p; };
    // 15 pair partitions of {0..5}
    static const int pairings[15][6] = {
        {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4}, {0, 2, 1, 3, 4, 5},
        {0, 2, 1, 4, 3, 5}, {0, 2, 1, 5, 3, 4}, {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5},
        {0, 3, 1, 5, 2, 4}, {0, 4, 1, 2, 3, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3},
        {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3}};
    unsigned long a = 0;
    for (auto& m : pairings)
        a = (a + sq(dif(m[0], m[1])) * sq(dif(m[2], m[3])) % p * sq(dif(m[4], m[5]))) % p;
    // 10 partitions into two triples (first triple contains 0)
    static const int triples[10][6] = {
        {0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 4, 2, 3, 5}, {0, 1, 5, 2, 3, 4},
        {0, 2, 3, 1, 4, 5}, {0, 2, 4, 1, 3, 5}, {0, 2, 5, 1, 3, 4}, {0, 3, 4, 1, 2, 5},
        {0, 3, 5, 1, 2, 4}, {0, 4, 5, 1, 2, 3}};
    auto tri2 = [&](int i, int j, int k) {
        return sq(dif(i, j)) * sq(dif(j, k)) % p * sq(dif(k, i)) % p;
    };
    unsigned long bsum = 0, csum = 0;
    for (auto& t : triples) {
        unsigned long base = tri2(t[0], t[1], t[2]) * tri2(t[3], t[4], t[5]) % p;
        bsum = (bsum + base) % p;
        int perm[3] = {t[3], t[4], t[5]};
        std::sort(perm, perm + 3);
        do {
            unsigned long match = sq(dif(t[0], perm[0])) * sq(dif(t[1], perm[1])) % p *
                                  sq(dif(t[2], perm[2])) % p;
            csum = (csum + base * match) % p;
        } while (std::next_permutation(perm, perm + 3));
    }
    unsigned long dprod = 1;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            dprod = dprod * sq(dif(i, j)) % p;
    unsigned long l2 = s.lead * s.lead % p;
    unsigned long l4 = l2 * l2 % p;
    A = l2 * a % p;
    B = l4 * bsum % p;
    C = l4 * l2 % p * csum % p;
    unsigned long l10 = l4 * l4 % p * l2 % p;
    D = l10 * dprod % p;
}

} // namespace

IgusaOracle igusa_by_split_primes(const Poly& Fin, const Int& bound) {
    // sexticize a quintic: shift so F(s) != 0, then reverse x -> 1/x;
    // both moves have det +-1 and leave even-degree invariants unchanged
    Poly F = trimmed(Fin);
    if (degree(F) == 5) {
        long s = 0;
        while (eval_at(F, Int(s)) == 0)
            ++s;
        // H(x) = F(x + s) by polynomial Horner, so H(0) != 0
        Poly H = {Int(0)};
        for (int i = 5; i >= 0; --i) {
            H = mul(H, Poly{Int(s), Int(1)});
            if (H.empty())
                H.push_back(Int(0));
            H[0] += F[i];
        }
        // G(x) = x^6 H(1/x): the infinity root moves to 0
        Poly G(7, Int(0));
        for (int j = 0; j <= 5; ++j)
            G[6 - j] = H[j];
        F = trimmed(G);
    }
    if (degree(F) != 6)
        throw std::logic_error("igusa oracle expects degree 5 or 6");

    Int modulus = 1;
    std::array<Int, 4> acc = {Int(0), Int(0), Int(0), Int(0)};
    unsigned long p = 1000;
    int used = 0;
    while (modulus <= 2 * bound + 1) {
        p = next_prime_at_least(p + 1);
        if (mpz_divisible_ui_p(leading_coeff(F).get_mpz_t(), p))
            continue;
        auto c = poly_mod(F, p);
        std::vector<unsigned long> roots;
        for (unsigned long x = 0; x < p && roots.size() <= 6; ++x)
            if (eval_mod(c, x, p) == 0)
                roots.push_back(x);
        if (roots.size() != 6)
            continue; // not fully split with distinct roots
        SplitSample s{p, c.back(), roots};
        unsigned long A, B, C, D;
        sums_mod_p(s, A, B, C, D);
        // CRT combine
        std::array<unsigned long, 4> res = {A, B, C, D};
        for (int i = 0; i < 4; ++i) {
            // x = acc (mod modulus), x = res[i] (mod p)
            Int pm(static_cast<unsigned long>(p));
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pm.get_mpz_t()) == 0)
                throw std::logic_error("CRT inverse failed");
            Int diff = (Int(res[i]) - acc[i]) % pm;
            if (diff < 0)
                diff += pm;
            acc[i] = acc[i] + modulus * ((diff * inv) % pm);
        }
        modulus *= static_cast<unsigned long>(p);
        ++used;
        if (used > 400)
            throw std::logic_error("igusa oracle: too many primes needed");
    }
    IgusaOracle out;
    std::array<Int*, 4> dst = {&out.I2, &out.I4, &out.I6, &out.I10};
    for (int i = 0; i < 4; ++i) {
        Int v = acc[i] % modulus;
        if (v < 0)
            v += modulus;
        if (2 * v > modulus)
            v -= modulus;
        *dst[i] = v;
    }
    return out;
}

std::vector<std::complex<double>> quartic_roots(const Quartic& P) {
    using C = std::complex<double>;
    std::array<C, 5> coef = {C(P.a0.get_d()), C(P.a1.get_d()), C(P.a2.get_d()),
                             C(P.a3.get_d()), C(1.0)};
    auto eval = [&](C z) {
        C v = 0;
        for (int i = 4; i >= 0; --i)
            v = v * z + coef[i];
        return v;
    };
    std::vector<C> r = {C(0.4, 0.9), C(-0.9, 0.4), C(-0.4, -0.9), C(0.9, -0.4)};
    double scale = 1.0;
    for (int i = 0; i < 4; ++i)
        scale = std::max(scale, std::abs(coef[i]));
    for (auto& z : r)
        z *= std::pow(scale, 0.25) + 1.0;
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < 4; ++i) {
            C denom = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i)
                    denom *= r[i] - r[j];
            C step = eval(r[i]) / denom;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14)
            break;
    }
    return r;
}

} // namespace nonsimple::oracle

#include "nonsimple/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <unordered_set>

#include "nonsimple/primes.hpp"

namespace nonsimple {

SympModule::SympModule(unsigned g, unsigned long ell, unsigned m)
    : g_(g), ell_(ell), m_(m) {
    if (g == 0 || m == 0)
        throw invalid_input_error("SympModule: g and m must be >= 1");
    if (!is_prime(ell))
        throw invalid_input_error("SympModule: ell must be prime");
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q_ > (1ul << 20) / ell)
            throw resource_limit_error("SympModule: ell^m too large");
        q_ *= ell;
    }
    size_ = 1;
    for (unsigned i = 0; i < 2 * g; ++i) {
        if (size_ > (1ul << 24) / q_)
            throw resource_limit_error("SympModule: module too large to hold");
        size_ *= q_;
    }
}

unsigned long SympModule::pairing(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw invalid_input_error("pairing: dimension mismatch");
    long long acc = 0;
    for (unsigned i = 0; i < g_; ++i) {
        acc += static_cast<long long>(u[i]) * v[g_ + i];
        acc -= static_cast<long long>(u[g_ + i]) * v[i];
        acc %= static_cast<long long>(q_);
    }
    return static_cast<unsigned long>((acc % static_cast<long long>(q_) +
                                       static_cast<long long>(q_)) %
                                      static_cast<long long>(q_));
}

bool SympModule::is_torsion(const Vec& v, unsigned j) const {
    if (j >= m_)
        return true;
    unsigned long t = 1;
    for (unsigned i = 0; i < m_ - j; ++i)
        t *= ell_; // l^{m-j}; l^j v = 0 iff every coordinate is a multiple of it
    for (uint32_t c : v)
        if (c % t != 0)
            return false;
    return true;
}

unsigned long SympModule::torsion_pairing(const Vec& u, const Vec& v, unsigned j) const {
    if (j > m_)
        throw invalid_input_error("torsion_pairing: j exceeds m");
    if (j == 0)
        return 0;
    if (!is_torsion(u, j) || !is_torsion(v, j))
        throw invalid_input_error("torsion_pairing: inputs are not l^j-torsion");
    unsigned long t = 1;
    for (unsigned i = 0; i < m_ - j; ++i)
        t *= ell_;
    Vec uu(dim()), vv(dim());
    for (unsigned i = 0; i < dim(); ++i) {
        uu[i] = static_cast<uint32_t>(u[i] / t);
        vv[i] = static_cast<uint32_t>(v[i] / t);
    }
    unsigned long qj = q_ / t;
    return pairing(uu, vv) % qj;
}

unsigned long SympModule::induced_mod_ell_pairing(const Vec& u, const Vec& v) const {
    return torsion_pairing(u, v, 1);
}

SympModule::Vec SympModule::decode(unsigned long index) const {
    Vec v(dim());
    for (unsigned i = 0; i < dim(); ++i) {
        v[i] = static_cast<uint32_t>(index % q_);
        index /= q_;
    }
    return v;
}

unsigned long SympModule::encode(const Vec& v) const {
    unsigned long idx = 0;
    for (unsigned i = dim(); i-- > 0;)
        idx = idx * q_ + v[i];
    return idx;
}

SympModule::Vec SympModule::add(const Vec& u, const Vec& v) const {
    Vec w(dim());
    for (unsigned i = 0; i < dim(); ++i)
        w[i] = static_cast<uint32_t>((static_cast<unsigned long>(u[i]) + v[i]) % q_);
    return w;
}

SympModule::Vec SympModule::scalar_mul(unsigned long c, const Vec& v) const {
    Vec w(dim());
    for (unsigned i = 0; i < dim(); ++i)
        w[i] = static_cast<uint32_t>(c % q_ * v[i] % q_);
    return w;
}

namespace {

unsigned long element_order(const SympModule& M, unsigned long idx) {
    // additive order in (Z/q)^{2g}: q / gcd(q, all coordinates)
    unsigned long q = M.modulus();
    unsigned long g = q;
    for (uint32_t c : M.decode(idx))
        g = std::gcd(g, static_cast<unsigned long>(c));
    return q / g;
}

struct MaskHash {
    size_t operator()(const std::vector<uint64_t>& mask) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : mask) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Mask = std::vector<uint64_t>;

void set_bit(Mask& m, unsigned long i) { m[i >> 6] |= 1ull << (i & 63); }
bool get_bit(const Mask& m, unsigned long i) { return (m[i >> 6] >> (i & 63)) & 1; }

struct SubgroupState {
    std::vector<uint32_t> elems; // sorted element indices
    Mask mask;
    std::vector<uint32_t> gens;  // generator indices added along the BFS path
};

// Span of S and one extra element x: S already a subgroup, so the closure is
// { s + j x : s in S, 0 <= j < ord(x) }.
SubgroupState extend(const SympModule& M, const SubgroupState& S, unsigned long x,
                     unsigned long n) {
    SubgroupState T;
    T.mask.assign((n + 63) / 64, 0);
    auto xv = M.decode(x);
    unsigned long ord = element_order(M, x);
    for (uint32_t s : S.elems) {
        auto acc = M.decode(s);
        for (unsigned long j = 0; j < ord; ++j) {
            unsigned long e = M.encode(acc);
            if (!get_bit(T.mask, e)) {
                set_bit(T.mask, e);
                T.elems.push_back(static_cast<uint32_t>(e));
            }
            acc = M.add(acc, xv);
        }
    }
    std::sort(T.elems.begin(), T.elems.end());
    T.gens = S.gens;
    T.gens.push_back(static_cast<uint32_t>(x));
    return T;
}

} // namespace

std::vector<std::vector<uint32_t>> howell_form(std::vector<std::vector<uint32_t>> mat,
                                               unsigned long modulus) {
    if (mat.empty())
        return mat;
    const size_t cols = mat[0].size();
    auto vmod = [&](long long x) {
        long long q = static_cast<long long>(modulus);
        return static_cast<uint32_t>((x % q + q) % q);
    };
    auto scale_row = [&](std::vector<uint32_t>& r, unsigned long c) {
        for (auto& x : r)
            x = static_cast<uint32_t>(c * x % modulus);
    };
    auto sub_mul = [&](std::vector<uint32_t>& r, const std::vector<uint32_t>& s,
                       unsigned long c) {
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = vmod(static_cast<long long>(r[i]) -
                        static_cast<long long>(c % modulus) * s[i]);
    };
    // extended gcd; callers only pass units of Z/l^m
    auto unit_inverse = [&](unsigned long a) {
        long long t0 = 0, t1 = 1;
        long long q0 = static_cast<long long>(modulus);
        long long q1 = static_cast<long long>(a % modulus);
        while (q1 != 0) {
            long long quo = q0 / q1;
            std::tie(q0, q1) = std::make_pair(q1, q0 - quo * q1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - quo * t1);
        }
        return static_cast<unsigned long>((t0 % static_cast<long long>(modulus) +
                                           static_cast<long long>(modulus)) %
                                          static_cast<long long>(modulus));
    };
    std::vector<std::vector<uint32_t>> done;
    std::vector<std::vector<uint32_t>> pool = std::move(mat);
    for (size_t col = 0; col < cols; ++col) {
        // pick the row whose col entry has minimal l-valuation
        size_t best = pool.size();
        unsigned long best_val = 0;
        for (size_t i = 0; i < pool.size(); ++i) {
            unsigned long v = pool[i][col];
            if (v == 0)
                continue;
            unsigned long lowbit = std::gcd(v, modulus); // l^{valuation}
            if (best == pool.size() || lowbit < best_val) {
                best = i;
                best_val = lowbit;
            }
        }
        if (best == pool.size())
            continue;
        auto row = pool[best];
        pool.erase(pool.begin() + static_cast<long>(best));
        // normalize pivot to l^a (strip the unit)
        unsigned long piv = row[col];
        unsigned long la = std::gcd(piv, modulus);
        scale_row(row, unit_inverse(piv / la));
        // eliminate col from the remaining pool rows
        for (auto& r : pool) {
            if (r[col] == 0)
                continue;
            sub_mul(r, row, r[col] / la); // valuation of r[col] >= a by pivot choice
        }
        // Howell completion: the annihilator multiple may reach new columns
        if (la > 1) {
            std::vector<uint32_t> ann = row;
            scale_row(ann, modulus / la);
            if (std::any_of(ann.begin(), ann.end(), [](uint32_t x) { return x != 0; }))
                pool.push_back(std::move(ann));
        }
        done.push_back(std::move(row));
    }
    // reduce entries above each pivot mod the pivot value
    for (size_t i = done.size(); i-- > 0;) {
        size_t col = 0;
        while (col < cols && done[i][col] == 0)
            ++col;
        for (size_t r = 0; r < i; ++r) {
            unsigned long c = done[r][col] / done[i][col];
            if (c)
                sub_mul(done[r], done[i], c);
        }
    }
    return done;
}

std::vector<Subgroup> enumerate_maximal_isotropic(const SympModule& M, unsigned long bound) {
    const unsigned long n = M.size();
    if (n > bound)
        throw resource_limit_error("enumerate_maximal_isotropic: module exceeds bound");
    unsigned long target = 1;
    for (unsigned i = 0; i < M.m() * M.g(); ++i)
        target *= M.ell(); // l^{mg}

    std::vector<SympModule::Vec> elems(n);
    for (unsigned long i = 0; i < n; ++i)
        elems[i] = M.decode(i);

    auto pair_idx = [&](unsigned long a, unsigned long b) {
        return M.pairing(elems[a], elems[b]);
    };

    std::unordered_set<Mask, MaskHash> seen;
    std::vector<SubgroupState> queue;
    std::vector<SubgroupState> found;
    std::unordered_set<Mask, MaskHash> found_masks;

    SubgroupState zero;
    zero.mask.assign((n + 63) / 64, 0);
    set_bit(zero.mask, 0);
    zero.elems = {0};
    seen.insert(zero.mask);
    queue.push_back(std::move(zero));

    while (!queue.empty()) {
        SubgroupState S = std::move(queue.back());
        queue.pop_back();
        if (S.elems.size() == target) {
            if (found_masks.insert(S.mask).second)
                found.push_back(std::move(S));
            continue;
        }
        for (unsigned long x = 1; x < n; ++x) {
            if (get_bit(S.mask, x))
                continue;
            // x must centralize S under the pairing and be self-orthogonal
            // (the latter is automatic for an alternating form)
            bool ok = true;
            for (uint32_t gidx : S.gens)
                if (pair_idx(x, gidx) != 0) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            SubgroupState T = extend(M, S, x, n);
            if (T.elems.size() > target)
                continue; // cannot sit inside a maximal isotropic subgroup
            if (seen.insert(T.mask).second)
                queue.push_back(std::move(T));
        }
    }

    // canonical order: lexicographic on the sorted element lists
    std::sort(found.begin(), found.end(),
              [](const SubgroupState& a, const SubgroupState& b) { return a.elems < b.elems; });

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& st : found) {
        Subgroup s;
        s.elements = st.elems;
        s.order = static_cast<long>(st.elems.size());
        std::vector<std::vector<uint32_t>> rows;
        for (uint32_t gidx : st.gens)
            rows.push_back(std::vector<uint32_t>(elems[gidx].begin(), elems[gidx].end()));
        if (rows.empty())
            rows.push_back(std::vector<uint32_t>(M.dim(), 0));
        s.gens = howell_form(std::move(rows), M.modulus());
        out.push_back(std::move(s));
    }
    return out;
}

bool verify_scaling_identity(const SympModule& M, unsigned long s, unsigned long t) {
    if (s == 0 || t == 0 || s * t != M.modulus())
        throw invalid_input_error("verify_scaling_identity: need s*t = ell^m");
    unsigned j = 0;
    for (unsigned long v = s; v > 1; v /= M.ell())
        ++j; // s = ell^j
    const unsigned long n = M.size();
    auto check = [&](unsigned long ui, unsigned long vi) {
        auto u = M.decode(ui), v = M.decode(vi);
        unsigned long lhs = t % M.modulus() * M.pairing(u, v) % M.modulus();
        auto tu = M.scalar_mul(t, u), tv = M.scalar_mul(t, v);
        unsigned long rhs = t % M.modulus() * M.torsion_pairing(tu, tv, j) % M.modulus();
        return lhs == rhs;
    };
    if (n <= 2048) {
        for (unsigned long a = 0; a < n; ++a)
            for (unsigned long b = 0; b < n; ++b)
                if (!check(a, b))
                    return false;
        return true;
    }
    std::mt19937_64 rng(0x5eed5eed);
    for (int i = 0; i < 20000; ++i)
        if (!check(rng() % n, rng() % n))
            return false;
    return true;
}

KernelDichotomyReport verify_kernel_dichotomy(const SympModule& M, unsigned long bound) {
    KernelDichotomyReport rep;
    auto lagr = enumerate_maximal_isotropic(M, bound);
    rep.lagrangians = lagr.size();
    const unsigned long q = M.modulus();
    for (const Subgroup& W : lagr) {
        unsigned long max_ord = 1;
        for (uint32_t e : W.elements)
            max_ord = std::max(max_ord, element_order(M, e));
        unsigned k = 0;
        for (unsigned long v = max_ord; v > 1; v /= M.ell())
            ++k; // minimal k with l^k W = 0
        bool branch_full = false;
        if (M.m() % 2 == 0 && k == M.m() / 2) {
            // W should be the full l^k-torsion
            unsigned long tor = 1;
            for (unsigned i = 0; i < M.m() - k; ++i)
                tor *= M.ell(); // coordinates must be multiples of l^{m-k}
            unsigned long count = 0;
            bool all_in = true;
            for (unsigned long e = 0; e < M.size(); ++e) {
                auto v = M.decode(e);
                bool in_tor = std::all_of(v.begin(), v.end(),
                                          [&](uint32_t c) { return c % tor == 0; });
                if (in_tor) {
                    ++count;
                    if (!std::binary_search(W.elements.begin(), W.elements.end(),
                                            static_cast<uint32_t>(e)))
                        all_in = false;
                }
            }
            branch_full = all_in && count == W.elements.size();
        }
        if (branch_full) {
            ++rep.full_torsion_branch;
            continue;
        }
        // l^{k-1} W must be nonzero and isotropic for the induced pairing
        unsigned long scale = 1;
        for (unsigned i = 0; i + 1 < k; ++i)
            scale *= M.ell(); // l^{k-1}
        std::vector<SympModule::Vec> image;
        std::unordered_set<unsigned long> image_seen;
        for (uint32_t e : W.elements) {
            auto v = M.scalar_mul(scale % q, M.decode(e));
            unsigned long idx = M.encode(v);
            if (idx != 0 && image_seen.insert(idx).second)
                image.push_back(std::move(v));
        }
        bool ok = !image.empty();
        for (size_t a = 0; ok && a < image.size(); ++a)
            for (size_t b = a; ok && b < image.size(); ++b)
                if (M.induced_mod_ell_pairing(image[a], image[b]) != 0)
                    ok = false;
        if (ok)
            ++rep.isotropic_branch;
        else
            ++rep.violations;
    }
    return rep;
}

Int sp_order(unsigned g, unsigned long ell) {
    if (g == 0)
        return Int(1);
    Int l(static_cast<long>(ell));
    Int out;
    mpz_pow_ui(out.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(g) * g);
    for (unsigned i = 1; i <= g; ++i) {
        Int term;
        mpz_pow_ui(term.get_mpz_t(), l.get_mpz_t(), 2ul * i);
        out *= term - 1;
    }
    return out;
}

Int isotropic_count(unsigned g, unsigned long ell, unsigned k) {
    if (k < 1 || k > g)
        throw invalid_input_error("isotropic_count: need 1 <= k <= g");
    Int l(static_cast<long>(ell));
    auto lpow = [&](unsigned e) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), l.get_mpz_t(), e);
        return r;
    };
    // gaussian binomial [g choose k]_l
    Int num = 1, den = 1;
    for (unsigned i = 1; i <= k; ++i) {
        num *= lpow(g - k + i) - 1;
        den *= lpow(i) - 1;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw internal_error("isotropic_count: gaussian binomial not integral");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (unsigned i = g - k + 1; i <= g; ++i)
        out *= lpow(i) + 1;
    return out;
}

Int block_diag_index(unsigned g, unsigned gB, unsigned long ell) {
    if (gB < 1 || gB >= g)
        throw invalid_input_error("block_diag_index: need 1 <= gB < g");
    Int whole = sp_order(g, ell);
    Int sub = sp_order(gB, ell) * sp_order(g - gB, ell);
    if (!mpz_divisible_p(whole.get_mpz_t(), sub.get_mpz_t()))
        throw internal_error("block_diag_index: index not integral");
    Int out;
    mpz_divexact(out.get_mpz_t(), whole.get_mpz_t(), sub.get_mpz_t());
    return out;
}

} // namespace nonsimple

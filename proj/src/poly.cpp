#include "nonsimple/poly.hpp"

namespace nonsimple {

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

int degree(const Poly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Int leading_coeff(const Poly& p) {
    int d = degree(p);
    return d < 0 ? Int(0) : p[d];
}

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    return trimmed(std::move(d));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return trimmed(std::move(out));
}

Int eval_at(const Poly& p, const Int& x) {
    Int v = 0;
    for (size_t i = p.size(); i-- > 0;)
        v = v * x + p[i];
    return v;
}

Rat eval_at(const Poly& p, const Rat& x) {
    Rat v(0L);
    for (size_t i = p.size(); i-- > 0;)
        v = v * x + Rat(p[i]);
    return v;
}

namespace {

// Fraction-free Gaussian elimination; exact determinant of a square matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0)
        return Int(1);
    int sign = 1;
    Int prev = 1;
    for (size_t i = 0; i + 1 < n; ++i) {
        size_t pivot = i;
        while (pivot < n && m[pivot][i] == 0)
            ++pivot;
        if (pivot == n)
            return Int(0);
        if (pivot != i) {
            std::swap(m[pivot], m[i]);
            sign = -sign;
        }
        for (size_t r = i + 1; r < n; ++r) {
            for (size_t c = i + 1; c < n; ++c) {
                Int t = m[i][i] * m[r][c] - m[r][i] * m[i][c];
                mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][i] = 0;
        }
        prev = m[i][i];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

} // namespace

Int resultant(const Poly& fin, const Poly& gin) {
    Poly f = trimmed(fin), g = trimmed(gin);
    int m = degree(f), n = degree(g);
    if (m < 0 || n < 0)
        return Int(0);
    if (m == 0 && n == 0)
        return Int(1);
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    // Sylvester matrix: n rows of f, m rows of g, coefficients descending.
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            s[r][r + j] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            s[n + r][r + j] = g[n - j];
    return bareiss_det(std::move(s));
}

Int discriminant(const Poly& fin) {
    Poly f = trimmed(fin);
    int n = degree(f);
    if (n < 1)
        throw invalid_input_error("discriminant: degree must be >= 1");
    if (n == 1)
        return Int(1);
    Int res = resultant(f, derivative(f));
    Int d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f[n].get_mpz_t());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0)
        d = -d;
    return d;
}

bool squarefree_over_Q(const Poly& f) {
    int n = degree(f);
    if (n < 0)
        return false;
    if (n <= 1)
        return true;
    return discriminant(f) != 0;
}

} // namespace nonsimple

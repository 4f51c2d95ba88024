#include "nonsimple/heights.hpp"

#include <algorithm>
#include <numeric>

namespace nonsimple {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0)
        throw invalid_input_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty())
        throw invalid_input_error("Rat: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s, 10));
        Int n(s.substr(0, slash), 10);
        Int d(s.substr(slash + 1), 10);
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw invalid_input_error("Rat: cannot parse \"" + s + "\"");
    }
}

std::string Rat::str() const {
    std::string out = num().get_str();
    if (den() != 1)
        out += "/" + den().get_str();
    return out;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0)
        throw invalid_input_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (v_ == 0)
        throw invalid_input_error("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

ProjPoint::ProjPoint(std::vector<Rat> c) : coords(std::move(c)) {
    if (coords.empty())
        throw invalid_input_error("ProjPoint: no coordinates");
}

Int mult_height(const Rat& t) {
    Int n = abs(t.num());
    Int d = t.den();
    return n > d ? n : d;
}

std::vector<Int> canonical_coords(const ProjPoint& p) {
    Int l = 1;
    for (const Rat& c : p.coords)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(p.coords.size());
    Int g = 0;
    for (const Rat& c : p.coords) {
        Int v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (g == 0)
        throw invalid_input_error("projective point with all coordinates zero");
    int sign = 0;
    for (Int& v : ints) {
        v /= g;
        if (sign == 0 && v != 0)
            sign = (v > 0) ? 1 : -1;
    }
    if (sign < 0)
        for (Int& v : ints)
            v = -v;
    return ints;
}

Int proj_height(const ProjPoint& p) {
    Int h = 0;
    for (const Int& v : canonical_coords(p)) {
        Int a = abs(v);
        if (a > h)
            h = a;
    }
    return h;
}

std::vector<Rat> enumerate_rationals(unsigned long B) {
    if (B == 0)
        throw invalid_input_error("enumerate_rationals: B must be >= 1");
    std::vector<Rat> out;
    out.emplace_back(-1L);
    out.emplace_back(0L);
    out.emplace_back(1L);
    for (unsigned long h = 2; h <= B; ++h) {
        for (long num = -static_cast<long>(h); num <= static_cast<long>(h); ++num) {
            unsigned long a = static_cast<unsigned long>(num < 0 ? -num : num);
            if (a == h) {
                // any coprime denominator 1 <= b < h keeps the height at h
                for (unsigned long b = 1; b < h; ++b)
                    if (std::gcd(a, b) == 1)
                        out.emplace_back(Int(num), Int(b));
            } else if (a != 0 && std::gcd(a, h) == 1) {
                // denominator must be exactly h
                out.emplace_back(Int(num), Int(h));
            }
        }
    }
    return out;
}

} // namespace nonsimple

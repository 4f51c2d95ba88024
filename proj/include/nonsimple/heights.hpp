#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nonsimple/errors.hpp"

namespace nonsimple {

using Int = mpz_class;

/// Reduced fraction over arbitrary-precision integers.
/// Invariants: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, Rat behaves like a number
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    /// Parses "a/b" or "a". Throws invalid_input_error on malformed text.
    static Rat parse(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }

    /// "a/b", with "/b" omitted when b = 1.
    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    /// Multiplicative inverse; throws invalid_input_error on zero.
    Rat inverse() const;

  private:
    mpq_class v_;
};

/// Point of projective space with rational coordinates, not all zero.
struct ProjPoint {
    std::vector<Rat> coords;

    explicit ProjPoint(std::vector<Rat> c);
};

/// H(t) = max(|num|, den); H(0) = 1.
Int mult_height(const Rat& t);

/// Canonical integer representative: denominators cleared by the lcm, divided
/// by the gcd, first nonzero coordinate positive.
std::vector<Int> canonical_coords(const ProjPoint& p);

/// Projective multiplicative height: max |coordinate| of the canonical form.
Int proj_height(const ProjPoint& p);

/// All t in Q with mult_height(t) <= B, sorted by (height, numerator,
/// denominator) ascending. B = 0 is invalid.
std::vector<Rat> enumerate_rationals(unsigned long B);

} // namespace nonsimple

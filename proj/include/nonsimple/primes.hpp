#pragma once

namespace nonsimple {

inline bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

inline unsigned long next_prime_at_least(unsigned long n) {
    if (n <= 2)
        return 2;
    if (n % 2 == 0)
        ++n;
    while (!is_prime(n))
        n += 2;
    return n;
}

} // namespace nonsimple

#pragma once

#include <optional>
#include <vector>

#include "nonsimple/hyperelliptic.hpp"

namespace nonsimple {

/// Evidence that the reduction at p is geometrically simple: ordinary, and
/// P_k irreducible over Q for k = 1 and every k in k_checked.
struct Certificate {
    unsigned long p = 0;
    long long c1 = 0;
    long long c2 = 0;
    std::vector<unsigned> k_checked;
};

struct Classification {
    enum class Status { certified_simple, candidate_non_simple, degenerate };

    Status status = Status::degenerate;
    std::optional<Certificate> certificate;     // present iff certified_simple
    std::vector<FrobeniusRecord> records;       // good-reduction evidence gathered
    unsigned long primes_tested = 0;            // odd primes examined (good or bad)
};

/// Newton-polygon slope test: ordinary iff p does not divide c2.
bool is_ordinary(long long c2, unsigned long p);

/// Extension degrees k for which a ratio of genus-2 Weil numbers can be a
/// primitive k-th root of unity: phi(k) <= 16 forces k <= 60. {2, ..., 60}.
std::vector<unsigned> default_k_test();

/// Exact irreducibility over Q of a monic integer quartic: no rational root
/// (divisors of the constant term) and no split into two monic integer
/// quadratics (divisor pairs b d = a0, linear elimination for the T-terms).
bool quartic_irreducible(const Quartic& P);

/// Runs the full certificate pipeline at one prime. Empty result when the
/// reduction is bad, non-ordinary, or some P_k is reducible.
std::optional<Certificate> certify_geometrically_simple(const GenusTwoCurve& curve,
                                                        unsigned long p,
                                                        const std::vector<unsigned>& k_test);

/// Walks odd primes p <= P_max in increasing order; the first certificate
/// wins. With no certificate, reports the gathered Frobenius records as a
/// candidate; t a root of f is degenerate.
Classification classify_parameter(const FamilySpec& family, const Rat& t,
                                  unsigned long P_max,
                                  const std::vector<unsigned>& k_test);

} // namespace nonsimple

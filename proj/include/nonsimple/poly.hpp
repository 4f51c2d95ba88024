#pragma once

#include <vector>

#include "nonsimple/heights.hpp"

namespace nonsimple {

/// Integer polynomial, ascending coefficients: p[i] is the x^i coefficient.
using Poly = std::vector<Int>;

/// Drops trailing zero coefficients.
Poly trimmed(Poly p);

/// Degree; -1 for the zero polynomial.
int degree(const Poly& p);

/// Leading coefficient (0 for the zero polynomial).
Int leading_coeff(const Poly& p);

Poly derivative(const Poly& p);

Poly mul(const Poly& a, const Poly& b);

Int eval_at(const Poly& p, const Int& x);
Rat eval_at(const Poly& p, const Rat& x);

/// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
Int resultant(const Poly& f, const Poly& g);

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), n = deg f >= 1.
Int discriminant(const Poly& f);

/// f squarefree over Q, i.e. disc(f) != 0 (degree <= 1 counts as squarefree).
bool squarefree_over_Q(const Poly& f);

} // namespace nonsimple

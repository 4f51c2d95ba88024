#pragma once

#include "nonsimple/hyperelliptic.hpp"

namespace nonsimple {

/// Igusa-Clebsch invariants of a genus-2 model y^2 = F(x), deg F in {5, 6},
/// in the root-difference normalization (so I10 is the discriminant of the
/// degree-6 model). I6prime = (I2 I4 - 3 I6)/2 and I12 = I2 I10 complete the
/// weight-(4, 6, 10, 12) generator set; j1, j2, j3 are the absolute
/// invariants I4 I6'/I10, I4^2 I12/I10^2, I4^5/I10^2.
struct IgusaInvariants {
    Int I2, I4, I6, I10, I12;
    Rat I6prime;
    Rat j1, j2, j3;
};

IgusaInvariants igusa_invariants(const GenusTwoCurve& curve);

/// Projective height of (j1 : j2 : j3 : 1).
Int j_height(const GenusTwoCurve& curve);

} // namespace nonsimple

#pragma once

// Nearest-point projection onto the tropical linear space L_p of a
// valuated matroid: the fast minimal-basis algorithm, the Blue and Red
// reference rules (small sizes only), and L_p membership.

#include "katz/tropical_value.hpp"
#include "katz/vmatroid.hpp"

namespace katz {

/// pi_{L_p}(x) via an x-minimal basis B: keeps x on B, corrects every other
/// coordinate from its fundamental circuit (at most rank-many candidates).
/// x must be finite on every ground element.
TropicalPoint project(const ValuatedMatroid& p, const TropicalPoint& x);

/// Blue Rule oracle: w_i = min over (n-1)-subsets s of
/// max_{j not in s} (p(s+i) - p(s+j) + x_j).  Enumerates C(m, n-1).
TropicalPoint project_blue(const ValuatedMatroid& p, const TropicalPoint& x);

/// Red Rule oracle: corrects x at every coordinate that is a unique
/// minimizer of some (n+1)-subset.  Enumerates C(m, n+1).
TropicalPoint project_red(const ValuatedMatroid& p, const TropicalPoint& x);

/// Membership via the cheap path project(p, x) == x.
bool in_linear_space(const ValuatedMatroid& p, const TropicalPoint& x);

/// Direct membership check from the defining (n+1)-subset condition
/// ("minimum attained twice"); enumeration-scale sizes only.
bool in_linear_space_direct(const ValuatedMatroid& p, const TropicalPoint& x);

}  // namespace katz

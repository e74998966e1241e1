#pragma once

// Lattices over the DVR of rational functions regular at z=0, given by
// finite generator families.  Column reduction produces an O-basis; the
// lattice valuation v_lambda is the reference oracle for the tropical
// projection (equal projections <=> equal lattices).

#include "katz/linalg.hpp"
#include "katz/tropical_value.hpp"

#include <vector>

namespace katz {

/// m generating columns, column i scaled by z^(-exponents[i]).
struct GeneratorFamily {
    RfMatrix vectors;             // n x m
    std::vector<long> exponents;  // length m
};

/// n columns forming an O-basis of the generated lattice.
struct LatticeBasis {
    RfMatrix columns;  // n x n, invertible over Q(z)
};

/// Gaussian elimination over the DVR: repeatedly pivot on the entry of
/// globally minimal valuation (ties: lowest row, then column) and clear
/// the pivot row from the other columns by unit multiples.
/// Throws std::invalid_argument if the family does not span.
LatticeBasis dvr_reduce(const GeneratorFamily& g);

/// v_lambda(x) = max { k : x in z^k * lambda }; infinity iff x = 0.
Trop lattice_valuation(const LatticeBasis& b, const RfVector& x);

/// Mutual-inclusion test.
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace katz

#pragma once

// Top-level pipeline: Poincare rank from pole orders, true Poincare rank
// from the integer projection-equality scan, Katz rank from the refined
// scan over the (1/N)-grid with N = lcm(1..n).

#include "katz/connection.hpp"
#include "katz/tropical_value.hpp"

#include <cstddef>
#include <vector>

namespace katz {

struct RankWitness {
    Rat k;
    bool equal;
};

struct RankReport {
    std::size_t poincare = 0;
    std::size_t true_poincare = 0;
    Rat katz = 0;
    std::size_t n = 0;
    std::size_t m_active = 0;
    std::vector<RankWitness> witnesses;
};

/// Smallest integer k with project(u^n_k) = project(u^{n-1}_k); the scan is
/// bounded by the Poincare rank, where equality is guaranteed.
std::size_t true_poincare_rank(const SystemMatrix& s);

/// Smallest k in (1/N)*{0..N*p} with projection equality; exact rational.
Rat katz_rank(const SystemMatrix& s);

/// All three ranks plus the (k, equal) trace of the Katz scan.
RankReport rank_report(const SystemMatrix& s);

long lcm_up_to(std::size_t n);

}  // namespace katz

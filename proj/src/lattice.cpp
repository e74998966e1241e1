#include "katz/lattice.hpp"

#include <stdexcept>

namespace katz {

LatticeBasis dvr_reduce(const GeneratorFamily& g) {
    std::size_t n = g.vectors.rows();
    std::size_t m = g.vectors.cols();
    if (g.exponents.size() != m) throw std::invalid_argument("dvr_reduce: exponent count mismatch");

    RfMatrix w(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        RationalFunction scale = RationalFunction::monomial(Rat(1), -g.exponents[j]);
        for (std::size_t i = 0; i < n; ++i) w.at(i, j) = scale * g.vectors.at(i, j);
    }

    std::vector<bool> row_done(n, false), col_done(m, false);
    std::vector<std::size_t> pivot_col_of_row(n, 0);

    for (std::size_t step = 0; step < n; ++step) {
        // Globally minimal valuation among the remaining submatrix.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Val best = Val::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (col_done[j] || w.at(i, j).is_zero()) continue;
                Val v = w.at(i, j).valuation();
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (!found) throw std::invalid_argument("dvr_reduce: family does not span (rank deficient)");

        RationalFunction inv = w.at(pr, pc).inv();
        for (std::size_t j = 0; j < m; ++j) {
            if (j == pc || col_done[j] || w.at(pr, j).is_zero()) continue;
            // factor is in O since the pivot has minimal valuation in its row
            RationalFunction f = w.at(pr, j) * inv;
            for (std::size_t i = 0; i < n; ++i) w.at(i, j) -= f * w.at(i, pc);
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivot_col_of_row[pr] = pc;
    }

    LatticeBasis b;
    b.columns = RfMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) b.columns.at(r, i) = w.at(r, pivot_col_of_row[i]);
    return b;
}

Trop lattice_valuation(const LatticeBasis& b, const RfVector& x) {
    bool zero = true;
    for (const auto& e : x)
        if (!e.is_zero()) zero = false;
    if (zero) return Trop::infinity();

    RfVector c = solve(b.columns, x);
    Val v = Val::infinity();
    for (const auto& ci : c) {
        Val vi = ci.valuation();
        if (vi < v) v = vi;
    }
    return Trop(v);
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
    std::size_t n = a.columns.rows();
    for (std::size_t j = 0; j < n; ++j) {
        Trop v = lattice_valuation(b, a.columns.column(j));
        if (v < Trop(0)) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Trop v = lattice_valuation(a, b.columns.column(j));
        if (v < Trop(0)) return false;
    }
    return true;
}

}  // namespace katz

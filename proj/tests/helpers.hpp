#pragma once

// Shared test utilities: entry parsing shortcuts, random instance
// generators and brute-force oracles kept independent of the fast paths
// they are used to check.

#include "katz/connection.hpp"
#include "katz/io.hpp"
#include "katz/lattice.hpp"
#include "katz/linalg.hpp"
#include "katz/tropical_value.hpp"
#include "katz/vmatroid.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace katz::testing {

inline RationalFunction rf(const std::string& s) { return parse_entry(s); }

inline RfMatrix matrix_from(const std::vector<std::vector<std::string>>& rows) {
    RfMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rf(rows[i][j]);
    return m;
}

/// The 4x4 example system in dX/dz form.
inline SystemMatrix pflugel_barkatou() {
    return SystemMatrix(matrix_from({
                            {"-5*z^-2", "5*z^-1", "-2*z^-1", "-9*z^-2"},
                            {"5*z^-3", "3*z^-2", "2*z^-2", "-4*z^-2"},
                            {"4*z^-1", "-5*z^-1", "-5*z^-2", "2"},
                            {"(2-2*z)/z^3", "-5*z^-1", "3*z^-2", "-6*z^-2"},
                        }),
                        SystemForm::dz);
}

/// Nonzero monomial c*z^v with small random c and v in [vmin, vmax].
inline RationalFunction random_monomial(std::mt19937_64& rng, long vmin, long vmax) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> val(vmin, vmax);
    long c = 0;
    while (c == 0) c = coeff(rng);
    return RationalFunction::monomial(Rat(c), val(rng));
}

/// Random full-rank n x m matrix of monomial entries (zeros allowed).
inline RfMatrix random_full_rank_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                        long vmin, long vmax) {
    std::uniform_int_distribution<int> zero(0, 3);
    while (true) {
        RfMatrix mat(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (zero(rng) != 0) mat.at(i, j) = random_monomial(rng, vmin, vmax);
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j)
            if (mat.column_is_zero(j)) ok = false;
        if (ok && rank(mat) == n) return mat;
    }
}

/// Random small system matrix in theta-form.
inline SystemMatrix random_system(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> zero(0, 2);
    RfMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (zero(rng) != 0) m.at(i, j) = random_monomial(rng, -2, 1);
    return SystemMatrix(std::move(m), SystemForm::theta);
}

template <typename F>
void each_subset(std::size_t m, std::size_t k, F&& fn) {
    if (k > m) return;
    Subset w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = i;
    while (true) {
        fn(w);
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (w[i] != i + m - k) {
                ++w[i];
                for (std::size_t j = i + 1; j < k; ++j) w[j] = w[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced || k == 0) return;
    }
}

/// All bases of p, by exhaustive enumeration.
inline std::vector<Subset> all_bases(const ValuatedMatroid& p) {
    std::vector<Subset> out;
    each_subset(p.ground_size(), p.rank(), [&](const Subset& w) {
        if (p.is_basis(w)) out.push_back(w);
    });
    return out;
}

/// Exhaustive minimum of p_x over all bases.
inline std::optional<std::pair<Subset, Trop>> exhaustive_minimum(const ValuatedMatroid& p,
                                                                const std::vector<Rat>& x) {
    ValuatedMatroid px = p.shifted(x);
    std::optional<std::pair<Subset, Trop>> best;
    each_subset(p.ground_size(), p.rank(), [&](const Subset& w) {
        Trop v = px.evaluate(w);
        if (v.is_inf()) return;
        if (!best || v < best->second) best = {w, v};
    });
    return best;
}

/// One valuated circuit per circuit support, via fundamental circuits over
/// all (basis, v) pairs.  Exhaustive; test sizes only.
inline std::vector<Circuit> all_circuits(const ValuatedMatroid& p) {
    std::vector<Circuit> out;
    std::vector<Subset> seen;
    for (const Subset& b : all_bases(p)) {
        for (std::size_t v = 0; v < p.ground_size(); ++v) {
            if (std::binary_search(b.begin(), b.end(), v)) continue;
            Circuit c = p.fundamental_circuit(b, v);
            Subset sup = c.support();
            if (std::find(seen.begin(), seen.end(), sup) != seen.end()) continue;
            seen.push_back(sup);
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline std::vector<Circuit> all_cocircuits(const ValuatedMatroid& p) {
    std::vector<Circuit> out;
    std::vector<Subset> seen;
    for (const Subset& b : all_bases(p)) {
        for (std::size_t v : b) {
            Circuit c = p.fundamental_cocircuit(b, v);
            Subset sup = c.support();
            if (std::find(seen.begin(), seen.end(), sup) != seen.end()) continue;
            seen.push_back(sup);
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline long to_long(const Trop& t) {
    Rat r = t.value();
    if (r.get_den() != 1) throw std::logic_error("to_long: not an integer");
    return r.get_num().get_si();
}

inline TropicalPoint finite_point(const std::vector<long>& v) {
    TropicalPoint p;
    for (long c : v) p.emplace_back(c);
    return p;
}

/// Generator family for the lattice spanned by membrane columns scaled by
/// an integer membrane point.
inline GeneratorFamily family_at(const MembraneData& md, const TropicalPoint& u) {
    GeneratorFamily g;
    g.vectors = md.columns();
    for (const auto& c : u) g.exponents.push_back(to_long(c));
    return g;
}

}  // namespace katz::testing

#pragma once

// Valuated matroids of rank n on [m], realized by determinant valuations
// p(w) = v(det M_w) of a full-rank matrix over Q(z).  Evaluations are
// memoized; the shift p_x shares the memo of its base matroid.

#include "katz/connection.hpp"
#include "katz/linalg.hpp"
#include "katz/tropical_value.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace katz {

using Subset = std::vector<std::size_t>;  // sorted element indices

/// Valuated circuit or cocircuit: a vector in (Q u {inf})^m defined up to
/// an additive constant; the support is the finite-coordinate set.
struct Circuit {
    TropicalPoint values;

    Subset support() const;
    /// Representative with minimum finite coordinate 0.
    Circuit normalized_min_zero() const;
    /// Representative with the given value at the given element.
    Circuit anchored(std::size_t element, const Trop& value) const;
};

struct AxiomReport {
    std::size_t samples = 0;
    std::size_t violations = 0;
};

class ValuatedMatroid {
public:
    /// Realize from an n x m matrix of rank n; throws on rank deficiency.
    static ValuatedMatroid realize(RfMatrix columns);
    static ValuatedMatroid realize(const MembraneData& md) { return realize(md.columns()); }
    /// Explicit table of basis valuations (subsets absent from the table are
    /// non-bases).  No axiom check is performed; meant for tests.
    static ValuatedMatroid from_table(std::size_t m, std::size_t n, std::map<Subset, Trop> table);

    std::size_t ground_size() const { return m_; }
    std::size_t rank() const { return n_; }

    /// p(w), with the current shift applied.  |w| must equal the rank.
    Trop evaluate(const Subset& w) const;
    bool is_basis(const Subset& w) const { return !evaluate(w).is_inf(); }

    /// p_x(B) = p(B) - sum_{b in B} x_b; composes with an existing shift.
    ValuatedMatroid shifted(const std::vector<Rat>& x) const;
    /// q = N*p, realized matroid of the ramified system (integer N >= 1).
    ValuatedMatroid scaled(long factor) const;

    /// X(B,v): coordinates p(B u v \ u) - p(B) for u in B u {v}, inf elsewhere.
    Circuit fundamental_circuit(const Subset& basis, std::size_t v,
                                std::optional<std::pair<std::size_t, Trop>> anchor = {}) const;
    /// X*(B,v): coordinates p(B u u \ v) - p(B), v in B.
    Circuit fundamental_cocircuit(const Subset& basis, std::size_t v) const;

    /// Any basis, by greedy column scan (exact rank tests).
    Subset some_basis() const;
    /// Basis minimizing p_x by single-exchange descent from some_basis().
    Subset minimal_basis(const std::vector<Rat>& x) const;

    /// Sample basis pairs and verify the tropical exchange inequality.
    AxiomReport check_exchange_axiom(std::size_t samples, std::uint64_t seed) const;

private:
    struct Realization {
        RfMatrix columns;                 // empty for table-backed matroids
        std::map<Subset, Trop> table;     // used when columns is empty
        std::size_t n = 0, m = 0;
        mutable std::map<Subset, Trop> memo;
        mutable Subset first_basis;  // cached some_basis() result
        mutable std::mutex memo_mutex;
    };

    ValuatedMatroid(std::shared_ptr<const Realization> r, std::vector<Rat> shift, long scale);
    Trop base_evaluate(const Subset& w) const;

    std::shared_ptr<const Realization> real_;
    std::vector<Rat> shift_;  // length m, zero when unshifted
    long scale_ = 1;
    std::size_t n_, m_;
};

}  // namespace katz

#pragma once

// System matrix in theta-form, Poincare rank, the iterated-derivative
// matrices A_0..A_n and the Gerard-Levelt membrane they span, together
// with the membrane lattice points u^l_k.

#include "katz/linalg.hpp"
#include "katz/tropical_value.hpp"

#include <cstddef>
#include <vector>

namespace katz {

enum class SystemForm { dz, theta };  // dX/dz = A X  vs  theta X = B X

/// Connection matrix, stored canonically in theta-form (B = z A).
class SystemMatrix {
public:
    SystemMatrix(RfMatrix m, SystemForm form);

    std::size_t dim() const { return b_.rows(); }
    const RfMatrix& theta_matrix() const { return b_; }

private:
    RfMatrix b_;
};

/// max(0, max_ij -v(B_ij)) on the theta-form matrix.
std::size_t poincare_rank(const SystemMatrix& s);

/// A_0 = I, A_{k+1} = theta(A_k) + B A_k, up to A_n.
std::vector<RfMatrix> iterated_matrices(const SystemMatrix& s);

/// The n x n(n+1) matrix [A_0 | A_1 | ... | A_n] with zero columns dropped.
class MembraneData {
public:
    explicit MembraneData(const SystemMatrix& s);

    std::size_t dim() const { return n_; }
    /// Number of active (nonzero) columns; the matroid's ground size.
    std::size_t ground_size() const { return active_.size(); }
    /// Original column index (0..n(n+1)-1) of active element e.
    std::size_t original_index(std::size_t e) const { return active_[e]; }
    /// Derivative order j of the block containing active element e.
    std::size_t block_of(std::size_t e) const { return active_[e] / n_; }
    /// v_lambda of active column e for the standard lattice (min entry valuation).
    const Trop& column_valuation(std::size_t e) const { return col_valuations_[e]; }

    /// n x ground_size matrix of the active columns.
    const RfMatrix& columns() const { return cols_; }

private:
    std::size_t n_;
    std::vector<std::size_t> active_;
    std::vector<Trop> col_valuations_;
    RfMatrix cols_;
};

struct MembranePoint {
    TropicalPoint coords;  // over the active ground set
    std::size_t ell;
    Rat k;
};

/// u^l_k: coordinate -k*j on blocks j <= ell, column valuation on blocks j > ell.
MembranePoint membrane_point(const MembraneData& md, std::size_t ell, const Rat& k);

}  // namespace katz

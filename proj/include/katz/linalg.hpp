#pragma once

// Dense exact linear algebra over Q(z): just enough for determinant
// valuations, rank tests and triangular solves on small matrices.

#include "katz/rational.hpp"

#include <vector>

namespace katz {

using RfVector = std::vector<RationalFunction>;

class RfMatrix {
public:
    RfMatrix() = default;
    RfMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RfMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RationalFunction& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalFunction& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RfVector column(std::size_t j) const;
    bool column_is_zero(std::size_t j) const;

    friend RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
    friend bool operator==(const RfMatrix& a, const RfMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RationalFunction> data_;
};

/// Exact determinant of a square matrix by Gaussian elimination.
RationalFunction determinant(RfMatrix m);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m);

/// z-adic valuation of det(m) without building the rational determinant:
/// clears denominators per column and runs the fraction-free elimination.
Val determinant_valuation(const RfMatrix& m);

/// Rank over the field Q(z).
std::size_t rank(RfMatrix m);

/// Solve a.x = b for square invertible a; throws on singular a.
RfVector solve(RfMatrix a, RfVector b);

}  // namespace katz

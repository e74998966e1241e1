#include "katz/connection.hpp"

#include <stdexcept>

namespace katz {

SystemMatrix::SystemMatrix(RfMatrix m, SystemForm form) : b_(std::move(m)) {
    if (b_.rows() != b_.cols() || b_.rows() == 0)
        throw std::invalid_argument("SystemMatrix: need a nonempty square matrix");
    if (form == SystemForm::dz) {
        RationalFunction z = RationalFunction::monomial(Rat(1), 1);
        for (std::size_t i = 0; i < b_.rows(); ++i)
            for (std::size_t j = 0; j < b_.cols(); ++j) b_.at(i, j) = z * b_.at(i, j);
    }
}

std::size_t poincare_rank(const SystemMatrix& s) {
    long p = 0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Val v = s.theta_matrix().at(i, j).valuation();
            if (!v.is_inf() && -v.value() > p) p = -v.value();
        }
    return static_cast<std::size_t>(p);
}

std::vector<RfMatrix> iterated_matrices(const SystemMatrix& s) {
    std::size_t n = s.dim();
    const RfMatrix& b = s.theta_matrix();
    std::vector<RfMatrix> a;
    a.reserve(n + 1);
    a.push_back(RfMatrix::identity(n));
    for (std::size_t k = 0; k < n; ++k) {
        RfMatrix next = b * a.back();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next.at(i, j) += a.back().at(i, j).theta();
        a.push_back(std::move(next));
    }
    return a;
}

MembraneData::MembraneData(const SystemMatrix& s) : n_(s.dim()) {
    std::vector<RfMatrix> blocks = iterated_matrices(s);
    for (std::size_t j = 0; j <= n_; ++j)
        for (std::size_t c = 0; c < n_; ++c) {
            if (blocks[j].column_is_zero(c)) continue;
            active_.push_back(j * n_ + c);
        }

    cols_ = RfMatrix(n_, active_.size());
    col_valuations_.resize(active_.size());
    for (std::size_t e = 0; e < active_.size(); ++e) {
        std::size_t j = active_[e] / n_;
        std::size_t c = active_[e] % n_;
        Val v = Val::infinity();
        for (std::size_t i = 0; i < n_; ++i) {
            cols_.at(i, e) = blocks[j].at(i, c);
            Val vi = cols_.at(i, e).valuation();
            if (vi < v) v = vi;
        }
        col_valuations_[e] = Trop(v);
    }
}

MembranePoint membrane_point(const MembraneData& md, std::size_t ell, const Rat& k) {
    if (ell > md.dim()) throw std::invalid_argument("membrane_point: ell > n");
    if (k < 0) throw std::invalid_argument("membrane_point: k must be nonnegative");
    MembranePoint pt;
    pt.ell = ell;
    pt.k = k;
    pt.coords.resize(md.ground_size());
    for (std::size_t e = 0; e < md.ground_size(); ++e) {
        std::size_t j = md.block_of(e);
        if (j <= ell)
            pt.coords[e] = Trop(-k * Rat(static_cast<long>(j)));
        else
            pt.coords[e] = md.column_valuation(e);
    }
    return pt;
}

}  // namespace katz

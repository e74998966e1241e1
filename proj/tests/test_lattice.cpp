#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "katz/lattice.hpp"

#include <random>

using namespace katz;
using namespace katz::testing;

namespace {

LatticeBasis standard_basis(std::size_t n) {
    LatticeBasis b;
    b.columns = RfMatrix::identity(n);
    return b;
}

RfVector vec(const std::vector<std::string>& entries) {
    RfVector v;
    for (const auto& e : entries) v.push_back(rf(e));
    return v;
}

}  // namespace

TEST_CASE("dvr_reduce on a basis is a basis of the same lattice") {
    GeneratorFamily g{RfMatrix::identity(3), {0, 0, 0}};
    LatticeBasis b = dvr_reduce(g);
    CHECK(lattice_equal(b, standard_basis(3)));
}

TEST_CASE("redundant generator is absorbed") {
    // (e1, z e1, e2) with zero exponents generates the standard lattice
    GeneratorFamily g{matrix_from({{"1", "z", "0"}, {"0", "0", "1"}}), {0, 0, 0}};
    LatticeBasis b = dvr_reduce(g);
    CHECK(lattice_equal(b, standard_basis(2)));
}

TEST_CASE("non-spanning family is rejected") {
    GeneratorFamily g{matrix_from({{"1", "z"}, {"0", "0"}}), {0, 0}};
    CHECK_THROWS_AS(dvr_reduce(g), std::invalid_argument);
}

TEST_CASE("lattice valuation basics") {
    LatticeBasis std4 = standard_basis(4);
    CHECK(lattice_valuation(std4, RfVector(4)).is_inf());
    // column with entry valuations (-6,-5,-5,-6) has v_lambda = -6
    CHECK(lattice_valuation(std4, vec({"z^-6", "z^-5", "-2*z^-5", "3*z^-6"})) == Trop(-6));

    // lattice generated by (e1, z^-1 e2): v(e2) = 1
    GeneratorFamily g{RfMatrix::identity(2), {0, 1}};
    LatticeBasis b = dvr_reduce(g);
    CHECK(lattice_valuation(b, vec({"0", "1"})) == Trop(1));
}

TEST_CASE("lattice equality") {
    LatticeBasis a = standard_basis(2);
    CHECK(lattice_equal(a, a));
    LatticeBasis scaled;
    scaled.columns = matrix_from({{"z", "0"}, {"0", "z"}});
    CHECK_FALSE(lattice_equal(a, scaled));
}

TEST_CASE("reduction output generates the input lattice") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 2;
        std::size_t m = n + rng() % 3;
        GeneratorFamily g;
        g.vectors = random_full_rank_matrix(rng, n, m, -2, 2);
        std::uniform_int_distribution<long> exp(-3, 3);
        for (std::size_t i = 0; i < m; ++i) g.exponents.push_back(exp(rng));
        LatticeBasis b = dvr_reduce(g);

        // every scaled generator lies in the reduced lattice
        for (std::size_t i = 0; i < m; ++i) {
            RfVector col = g.vectors.column(i);
            RationalFunction s = RationalFunction::monomial(Rat(1), -g.exponents[i]);
            for (auto& e : col) e = s * e;
            CHECK(Trop(0) <= lattice_valuation(b, col));
        }
        // and the reduced columns lie in the generated lattice: rebuild from
        // the original family plus the basis and check nothing shrinks
        GeneratorFamily both = g;
        for (std::size_t j = 0; j < n; ++j) {
            RfVector col = b.columns.column(j);
            RfMatrix wider(n, both.vectors.cols() + 1);
            for (std::size_t c = 0; c < both.vectors.cols(); ++c)
                for (std::size_t r = 0; r < n; ++r) wider.at(r, c) = both.vectors.at(r, c);
            for (std::size_t r = 0; r < n; ++r) wider.at(r, both.vectors.cols()) = col[r];
            both.vectors = std::move(wider);
            both.exponents.push_back(0);
        }
        CHECK(lattice_equal(dvr_reduce(both), b));
    }
}

TEST_CASE("valuation laws") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 2;
        GeneratorFamily g;
        g.vectors = random_full_rank_matrix(rng, n, n + 1, -2, 2);
        g.exponents.assign(n + 1, 0);
        LatticeBasis b = dvr_reduce(g);

        RfVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = random_monomial(rng, -2, 2);
            y[i] = random_monomial(rng, -2, 2);
        }
        long k = static_cast<long>(rng() % 5) - 2;
        RfVector zx(n);
        for (std::size_t i = 0; i < n; ++i)
            zx[i] = RationalFunction::monomial(Rat(1), k) * x[i];
        CHECK(lattice_valuation(b, zx) == Trop(k) + lattice_valuation(b, x));

        RfVector sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
        Trop lo = min(lattice_valuation(b, x), lattice_valuation(b, y));
        CHECK(lo <= lattice_valuation(b, sum));
    }
}

#include "katz/ranks.hpp"

#include "katz/tropical.hpp"
#include "katz/vmatroid.hpp"

#include <numeric>
#include <stdexcept>

namespace katz {

long lcm_up_to(std::size_t n) {
    long l = 1;
    for (std::size_t i = 2; i <= n; ++i) l = std::lcm(l, static_cast<long>(i));
    return l;
}

namespace {

struct Pipeline {
    MembraneData membrane;
    ValuatedMatroid matroid;
    std::size_t n;

    explicit Pipeline(const SystemMatrix& s)
        : membrane(s), matroid(ValuatedMatroid::realize(membrane)), n(s.dim()) {}

    bool projections_equal(const Rat& k) {
        TropicalPoint hi = project(matroid, membrane_point(membrane, n, k).coords);
        TropicalPoint lo = project(matroid, membrane_point(membrane, n - 1, k).coords);
        return hi == lo;
    }
};

}  // namespace

std::size_t true_poincare_rank(const SystemMatrix& s) {
    std::size_t p = poincare_rank(s);
    Pipeline pipe(s);
    for (std::size_t k = 0; k < p; ++k)
        if (pipe.projections_equal(Rat(static_cast<long>(k)))) return k;
    return p;  // stabilization is guaranteed at k = p
}

Rat katz_rank(const SystemMatrix& s) {
    std::size_t p = poincare_rank(s);
    long n_grid = lcm_up_to(s.dim());
    Pipeline pipe(s);
    for (long j = 0; j < n_grid * static_cast<long>(p); ++j) {
        Rat k(j, n_grid);
        k.canonicalize();
        if (pipe.projections_equal(k)) return k;
    }
    return Rat(static_cast<long>(p));
}

RankReport rank_report(const SystemMatrix& s) {
    RankReport r;
    r.n = s.dim();
    r.poincare = poincare_rank(s);
    Pipeline pipe(s);
    r.m_active = pipe.membrane.ground_size();

    long n_grid = lcm_up_to(s.dim());
    bool have_katz = false, have_true = false;
    for (long j = 0; j <= n_grid * static_cast<long>(r.poincare); ++j) {
        Rat k(j, n_grid);
        k.canonicalize();
        bool eq = pipe.projections_equal(k);
        r.witnesses.push_back({k, eq});
        if (eq && !have_katz) {
            r.katz = k;
            have_katz = true;
        }
        if (eq && !have_true && k.get_den() == 1) {
            r.true_poincare = static_cast<std::size_t>(k.get_num().get_si());
            have_true = true;
        }
        if (have_katz && have_true) break;
    }
    if (!have_katz) r.katz = Rat(static_cast<long>(r.poincare));
    if (!have_true) r.true_poincare = r.poincare;
    return r;
}

}  // namespace katz

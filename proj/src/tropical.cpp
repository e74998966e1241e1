#include "katz/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace katz {

namespace {

constexpr unsigned long long kEnumerationLimit = 100000;

std::vector<Rat> finite_coords(const TropicalPoint& x, std::size_t m) {
    if (x.size() != m) throw std::invalid_argument("project: coordinate count mismatch");
    std::vector<Rat> r(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i].is_inf())
            throw std::invalid_argument("project: infinite coordinate in input point");
        r[i] = x[i].value();
    }
    return r;
}

unsigned long long binomial(std::size_t m, std::size_t k) {
    if (k > m) return 0;
    unsigned long long r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
    return r;
}

template <typename F>
void for_each_combination(std::size_t m, std::size_t k, F&& fn) {
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

Subset insert_sorted(Subset s, std::size_t e) {
    s.insert(std::upper_bound(s.begin(), s.end(), e), e);
    return s;
}

Subset erase_at(const Subset& s, std::size_t pos) {
    Subset r;
    r.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != pos) r.push_back(s[i]);
    return r;
}

}  // namespace

TropicalPoint project(const ValuatedMatroid& p, const TropicalPoint& x) {
    std::size_t m = p.ground_size();
    std::vector<Rat> xr = finite_coords(x, m);

    Subset b = p.minimal_basis(xr);
    Trop pb = p.evaluate(b);

    TropicalPoint w(m);
    std::vector<bool> in_b(m, false);
    for (std::size_t e : b) in_b[e] = true;

    for (std::size_t i = 0; i < m; ++i) {
        if (in_b[i]) {
            w[i] = x[i];
            continue;
        }
        // min over the fundamental circuit of (B, i): candidates are the u in B
        // for which the exchange stays a basis.
        Trop best = Trop::infinity();
        for (std::size_t uj = 0; uj < b.size(); ++uj) {
            Subset cand = insert_sorted(erase_at(b, uj), i);
            Trop val = p.evaluate(cand);
            if (val.is_inf()) continue;
            best = min(best, val - pb + x[b[uj]]);
        }
        w[i] = best;
    }
    return w;
}

TropicalPoint project_blue(const ValuatedMatroid& p, const TropicalPoint& x) {
    std::size_t m = p.ground_size();
    std::size_t n = p.rank();
    finite_coords(x, m);
    if (binomial(m, n - 1) > kEnumerationLimit)
        throw std::invalid_argument("project_blue: instance too large for enumeration");

    TropicalPoint w(m, Trop::infinity());
    for_each_combination(m, n - 1, [&](const Subset& sigma) {
        std::vector<bool> in_sigma(m, false);
        for (std::size_t e : sigma) in_sigma[e] = true;
        // p(sigma + j) for all j outside sigma, computed once per sigma.
        std::vector<Trop> ext(m, Trop::infinity());
        for (std::size_t j = 0; j < m; ++j)
            if (!in_sigma[j]) ext[j] = p.evaluate(insert_sorted(sigma, j));
        for (std::size_t i = 0; i < m; ++i) {
            if (in_sigma[i] || ext[i].is_inf()) continue;
            // max over j outside sigma with p(sigma + j) finite (j = i gives x_i)
            Trop worst = Trop(x[i]);
            for (std::size_t j = 0; j < m; ++j) {
                if (in_sigma[j] || j == i || ext[j].is_inf()) continue;
                Trop t = ext[i] - ext[j] + x[j];
                if (worst < t) worst = t;
            }
            w[i] = min(w[i], worst);
        }
    });
    return w;
}

TropicalPoint project_red(const ValuatedMatroid& p, const TropicalPoint& x) {
    std::size_t m = p.ground_size();
    std::size_t n = p.rank();
    finite_coords(x, m);
    if (binomial(m, n + 1) > kEnumerationLimit)
        throw std::invalid_argument("project_red: instance too large for enumeration");

    std::vector<Trop> v(m, Trop(0));
    for_each_combination(m, n + 1, [&](const Subset& tau) {
        std::vector<Trop> terms(tau.size());
        for (std::size_t i = 0; i < tau.size(); ++i)
            terms[i] = p.evaluate(erase_at(tau, i)) + x[tau[i]];
        std::size_t argmin = 0;
        for (std::size_t i = 1; i < tau.size(); ++i)
            if (terms[i] < terms[argmin]) argmin = i;
        if (terms[argmin].is_inf()) return;
        std::size_t hits = 0;
        Trop second = Trop::infinity();
        for (std::size_t i = 0; i < tau.size(); ++i) {
            if (terms[i] == terms[argmin]) {
                ++hits;
            } else {
                second = min(second, terms[i]);
            }
        }
        if (hits != 1) return;
        Trop gamma = second - terms[argmin];
        std::size_t e = tau[argmin];
        if (v[e] < gamma) v[e] = gamma;
    });

    TropicalPoint w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = x[i] + v[i];
    return w;
}

bool in_linear_space(const ValuatedMatroid& p, const TropicalPoint& x) {
    return project(p, x) == x;
}

bool in_linear_space_direct(const ValuatedMatroid& p, const TropicalPoint& x) {
    std::size_t m = p.ground_size();
    std::size_t n = p.rank();
    if (x.size() != m) throw std::invalid_argument("in_linear_space: size mismatch");
    if (binomial(m, n + 1) > kEnumerationLimit)
        throw std::invalid_argument("in_linear_space_direct: instance too large");

    bool member = true;
    for_each_combination(m, n + 1, [&](const Subset& tau) {
        if (!member) return;
        Trop best = Trop::infinity();
        std::size_t hits = 0;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            Trop t = p.evaluate(erase_at(tau, i)) + x[tau[i]];
            if (t < best) {
                best = t;
                hits = 1;
            } else if (t == best && !t.is_inf()) {
                ++hits;
            }
        }
        if (!best.is_inf() && hits < 2) member = false;
    });
    return member;
}

}  // namespace katz

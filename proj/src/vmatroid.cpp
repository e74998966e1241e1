#include "katz/vmatroid.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace katz {

namespace {

bool contains(const Subset& s, std::size_t e) {
    return std::binary_search(s.begin(), s.end(), e);
}

// B u {v} \ {u}, kept sorted.
Subset exchange(const Subset& b, std::size_t drop, std::size_t add) {
    Subset r;
    r.reserve(b.size());
    for (std::size_t e : b)
        if (e != drop) r.push_back(e);
    r.insert(std::upper_bound(r.begin(), r.end(), add), add);
    return r;
}

}  // namespace

Subset Circuit::support() const {
    Subset s;
    for (std::size_t e = 0; e < values.size(); ++e)
        if (!values[e].is_inf()) s.push_back(e);
    return s;
}

Circuit Circuit::normalized_min_zero() const {
    Trop m = Trop::infinity();
    for (const auto& v : values) m = min(m, v);
    if (m.is_inf()) return *this;
    Circuit c;
    c.values.reserve(values.size());
    for (const auto& v : values) c.values.push_back(v - m);
    return c;
}

Circuit Circuit::anchored(std::size_t element, const Trop& value) const {
    if (values.at(element).is_inf())
        throw std::invalid_argument("Circuit: anchor element outside support");
    Trop delta = value - Trop(values[element].value());
    Circuit c;
    c.values.reserve(values.size());
    for (const auto& v : values) c.values.push_back(v + delta);
    return c;
}

ValuatedMatroid::ValuatedMatroid(std::shared_ptr<const Realization> r, std::vector<Rat> shift,
                                 long scale)
    : real_(std::move(r)), shift_(std::move(shift)), scale_(scale), n_(real_->n), m_(real_->m) {}

ValuatedMatroid ValuatedMatroid::realize(RfMatrix columns) {
    auto r = std::make_shared<Realization>();
    r->n = columns.rows();
    r->m = columns.cols();
    if (katz::rank(columns) != r->n)
        throw std::invalid_argument("ValuatedMatroid: matrix is rank deficient");
    r->columns = std::move(columns);
    return ValuatedMatroid(std::move(r), std::vector<Rat>(), 1);
}

ValuatedMatroid ValuatedMatroid::from_table(std::size_t m, std::size_t n,
                                            std::map<Subset, Trop> table) {
    bool any_finite = false;
    for (const auto& [w, v] : table)
        if (!v.is_inf()) any_finite = true;
    if (!any_finite) throw std::invalid_argument("ValuatedMatroid: table has no basis");
    auto r = std::make_shared<Realization>();
    r->n = n;
    r->m = m;
    r->table = std::move(table);
    return ValuatedMatroid(std::move(r), std::vector<Rat>(), 1);
}

Trop ValuatedMatroid::base_evaluate(const Subset& w) const {
    if (w.size() != n_) throw std::invalid_argument("ValuatedMatroid: subset size != rank");
    {
        std::scoped_lock lock(real_->memo_mutex);
        auto it = real_->memo.find(w);
        if (it != real_->memo.end()) return it->second;
    }
    Trop v;
    if (real_->columns.cols() > 0) {
        RfMatrix sub(n_, n_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (w[j] >= m_) throw std::out_of_range("ValuatedMatroid: element out of range");
            for (std::size_t i = 0; i < n_; ++i) sub.at(i, j) = real_->columns.at(i, w[j]);
        }
        v = Trop(determinant_valuation(sub));
    } else {
        auto it = real_->table.find(w);
        v = it == real_->table.end() ? Trop::infinity() : it->second;
    }
    std::scoped_lock lock(real_->memo_mutex);
    real_->memo.emplace(w, v);
    return v;
}

Trop ValuatedMatroid::evaluate(const Subset& w) const {
    Trop v = base_evaluate(w);
    if (v.is_inf()) return v;
    Rat val = v.value() * Rat(scale_);
    for (std::size_t e : w)
        if (!shift_.empty()) val -= shift_[e];
    return Trop(val);
}

ValuatedMatroid ValuatedMatroid::shifted(const std::vector<Rat>& x) const {
    if (x.size() != m_) throw std::invalid_argument("ValuatedMatroid: shift size mismatch");
    std::vector<Rat> s = shift_.empty() ? std::vector<Rat>(m_, Rat(0)) : shift_;
    for (std::size_t e = 0; e < m_; ++e) s[e] += x[e];
    return ValuatedMatroid(real_, std::move(s), scale_);
}

ValuatedMatroid ValuatedMatroid::scaled(long factor) const {
    if (factor < 1) throw std::invalid_argument("ValuatedMatroid: scale factor must be >= 1");
    std::vector<Rat> s = shift_;
    for (auto& e : s) e *= factor;
    return ValuatedMatroid(real_, std::move(s), scale_ * factor);
}

Circuit ValuatedMatroid::fundamental_circuit(const Subset& basis, std::size_t v,
                                             std::optional<std::pair<std::size_t, Trop>> anchor) const {
    if (contains(basis, v)) throw std::invalid_argument("fundamental_circuit: v is in B");
    Trop pb = evaluate(basis);
    if (pb.is_inf()) throw std::invalid_argument("fundamental_circuit: B is not a basis");
    Circuit c;
    c.values.assign(m_, Trop::infinity());
    c.values[v] = Trop(0);
    for (std::size_t u : basis) c.values[u] = evaluate(exchange(basis, u, v)) - pb;
    if (anchor) return c.anchored(anchor->first, anchor->second);
    return c.normalized_min_zero();
}

Circuit ValuatedMatroid::fundamental_cocircuit(const Subset& basis, std::size_t v) const {
    if (!contains(basis, v)) throw std::invalid_argument("fundamental_cocircuit: v not in B");
    Trop pb = evaluate(basis);
    if (pb.is_inf()) throw std::invalid_argument("fundamental_cocircuit: B is not a basis");
    Circuit c;
    c.values.assign(m_, Trop::infinity());
    c.values[v] = Trop(0);
    for (std::size_t u = 0; u < m_; ++u) {
        if (contains(basis, u)) continue;
        c.values[u] = evaluate(exchange(basis, v, u)) - pb;
    }
    return c.normalized_min_zero();
}

Subset ValuatedMatroid::some_basis() const {
    {
        std::scoped_lock lock(real_->memo_mutex);
        if (!real_->first_basis.empty()) return real_->first_basis;
    }
    if (real_->columns.cols() > 0) {
        // Greedy scan with exact rank tests.
        Subset b;
        std::size_t have = 0;
        for (std::size_t e = 0; e < m_ && have < n_; ++e) {
            RfMatrix trial(n_, have + 1);
            for (std::size_t j = 0; j < have; ++j)
                for (std::size_t i = 0; i < n_; ++i) trial.at(i, j) = real_->columns.at(i, b[j]);
            for (std::size_t i = 0; i < n_; ++i) trial.at(i, have) = real_->columns.at(i, e);
            if (katz::rank(trial) == have + 1) {
                b.push_back(e);
                ++have;
            }
        }
        if (have != n_) throw std::logic_error("some_basis: rank deficiency");
        std::scoped_lock lock(real_->memo_mutex);
        real_->first_basis = b;
        return b;
    }
    // Table-backed: scan all n-subsets (test sizes only).
    Subset w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = i;
    while (true) {
        if (is_basis(w)) {
            std::scoped_lock lock(real_->memo_mutex);
            real_->first_basis = w;
            return w;
        }
        // next combination
        std::size_t i = n_;
        while (i-- > 0) {
            if (w[i] != i + m_ - n_) {
                ++w[i];
                for (std::size_t j = i + 1; j < n_; ++j) w[j] = w[j - 1] + 1;
                break;
            }
            if (i == 0) throw std::logic_error("some_basis: no basis found");
        }
    }
}

Subset ValuatedMatroid::minimal_basis(const std::vector<Rat>& x) const {
    ValuatedMatroid px = shifted(x);
    Subset b = some_basis();
    Trop best = px.evaluate(b);
    bool improved = true;
    while (improved) {
        improved = false;
        // First improving swap in (u, v) lexicographic order.
        for (std::size_t ui = 0; ui < n_ && !improved; ++ui) {
            std::size_t u = b[ui];
            for (std::size_t v = 0; v < m_ && !improved; ++v) {
                if (contains(b, v)) continue;
                Subset cand = exchange(b, u, v);
                Trop val = px.evaluate(cand);
                if (val < best) {
                    b = std::move(cand);
                    best = val;
                    improved = true;
                }
            }
        }
    }
    return b;
}

AxiomReport ValuatedMatroid::check_exchange_axiom(std::size_t samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    Subset start = some_basis();

    auto random_basis = [&]() {
        Subset b = start;
        std::uniform_int_distribution<std::size_t> pick_u(0, n_ - 1);
        std::uniform_int_distribution<std::size_t> pick_v(0, m_ - 1);
        for (std::size_t t = 0; t < 4 * n_ + 4; ++t) {
            std::size_t u = b[pick_u(rng)];
            std::size_t v = pick_v(rng);
            if (contains(b, v)) continue;
            Subset cand = exchange(b, u, v);
            if (is_basis(cand)) b = std::move(cand);
        }
        return b;
    };

    AxiomReport report;
    for (std::size_t s = 0; s < samples; ++s) {
        ++report.samples;
        Subset b1 = random_basis();
        Subset b2 = random_basis();
        Subset diff;
        std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(diff));
        if (diff.empty()) continue;
        std::size_t u = diff[rng() % diff.size()];
        Trop lhs = evaluate(b1) + evaluate(b2);
        bool ok = false;
        for (std::size_t v : b2) {
            if (contains(b1, v)) continue;
            Trop rhs = evaluate(exchange(b1, u, v)) + evaluate(exchange(b2, v, u));
            if (!(lhs < rhs)) {
                ok = true;
                break;
            }
        }
        if (!ok) ++report.violations;
    }
    return report;
}

}  // namespace katz

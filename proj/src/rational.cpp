#include "katz/rational.hpp"

#include <sstream>

namespace katz {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Rat> v(exponent + 1, Rat(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
}

Val Polynomial::low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return Val(static_cast<long>(i));
    return Val::infinity();
}

const Rat& Polynomial::coeff(std::size_t i) const {
    static const Rat zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rat& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("Polynomial: leading() of zero");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
    std::vector<Rat> rem = a.coeffs_;
    long db = b.degree();
    long dq = static_cast<long>(rem.size()) - 1 - db;
    if (dq < 0) return {Polynomial{}, a};
    std::vector<Rat> quot(dq + 1, Rat(0));
    for (long k = dq; k >= 0; --k) {
        Rat c = (static_cast<std::size_t>(k + db) < rem.size() ? rem[k + db] : Rat(0)) / b.leading();
        if (c == 0) continue;
        quot[k] = c;
        for (long i = 0; i <= db; ++i) rem[k + i] -= c * b.coeffs_[i];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading());
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    std::vector<Rat> v(coeffs_);
    for (auto& x : v) x /= c;
    return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        Rat a = first ? c : Rat(abs(c));
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rat(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(lead);
        den_ = den_.scaled(lead);
    }
}

RationalFunction RationalFunction::monomial(const Rat& c, long k) {
    if (c == 0) return {};
    if (k >= 0)
        return RationalFunction(Polynomial::monomial(c, static_cast<std::size_t>(k)), Polynomial(Rat(1)));
    return RationalFunction(Polynomial(c), Polynomial::monomial(Rat(1), static_cast<std::size_t>(-k)));
}

Val RationalFunction::valuation() const {
    if (num_.is_zero()) return Val::infinity();
    return Val(num_.low_order().value() - den_.low_order().value());
}

RationalFunction RationalFunction::theta() const {
    // z * (n'd - nd') / d^2
    Polynomial z = Polynomial::monomial(Rat(1), 1);
    Polynomial n = z * (num_.derivative() * den_ - num_ * den_.derivative());
    return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inv(); }

std::string RationalFunction::str() const {
    if (den_ == Polynomial(Rat(1))) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.degree() > 0 || n.find('/') != std::string::npos) n = "(" + n + ")";
    if (den_.degree() > 0 || d.find('/') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace katz

#pragma once

// Exact arithmetic in Q(z): polynomials over Q, rational functions with
// z-adic valuation and the Euler derivation theta = z d/dz.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace katz {

using Rat = mpq_class;

/// Integer valuation extended with +infinity (valuation of 0).
class Val {
public:
    Val() : inf_(true), v_(0) {}
    explicit Val(long v) : inf_(false), v_(v) {}

    static Val infinity() { return Val(); }

    bool is_inf() const { return inf_; }
    long value() const {
        if (inf_) throw std::logic_error("Val: value() of infinity");
        return v_;
    }

    friend bool operator==(const Val& a, const Val& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const Val& a, const Val& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend Val operator+(const Val& a, const Val& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Val(a.v_ + b.v_);
    }

private:
    bool inf_;
    long v_;
};

/// Dense polynomial over Q, coefficients from degree 0 up, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Rat& c, std::size_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Smallest exponent with nonzero coefficient (infinity for 0).
    Val low_order() const;
    const Rat& coeff(std::size_t i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Euclidean division; b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd; gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial derivative() const;
    /// Divide every coefficient by c (c != 0).
    Polynomial scaled(const Rat& c) const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Element of Q(z), stored as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}
    RationalFunction(long n) : RationalFunction(Rat(n)) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_polynomial(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial(Rat(1)));
    }
    /// c * z^k for any integer k (negative allowed).
    static RationalFunction monomial(const Rat& c, long k);

    bool is_zero() const { return num_.is_zero(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    /// z-adic valuation: v(num) - v(den); infinity iff zero.
    Val valuation() const;

    /// z * d/dz, exact by the quotient rule.
    RationalFunction theta() const;

    RationalFunction inv() const;
    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    // Canonical representation makes equality representational.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string str() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_{Rat(1)};
};

}  // namespace katz

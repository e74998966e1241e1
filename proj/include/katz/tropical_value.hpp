#pragma once

// Min-plus semiring over Q with an explicit infinity element.

#include "katz/rational.hpp"

#include <string>
#include <vector>

namespace katz {

class Trop {
public:
    Trop() : inf_(true) {}
    Trop(Rat v) : inf_(false), v_(std::move(v)) {}
    Trop(long v) : inf_(false), v_(v) {}
    explicit Trop(const Val& v) : inf_(v.is_inf()) {
        if (!inf_) v_ = Rat(v.value());
    }

    static Trop infinity() { return Trop(); }

    bool is_inf() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw std::logic_error("Trop: value() of infinity");
        return v_;
    }

    friend bool operator==(const Trop& a, const Trop& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const Trop& a, const Trop& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Trop& a, const Trop& b) { return a < b || a == b; }
    friend bool operator>(const Trop& a, const Trop& b) { return b < a; }
    friend bool operator>=(const Trop& a, const Trop& b) { return b <= a; }

    /// Tropical multiplication (classical addition).
    friend Trop operator+(const Trop& a, const Trop& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Trop(a.v_ + b.v_);
    }
    /// Classical subtraction; only defined when b is finite.
    friend Trop operator-(const Trop& a, const Trop& b) {
        if (b.inf_) throw std::logic_error("Trop: subtracting infinity");
        if (a.inf_) return infinity();
        return Trop(a.v_ - b.v_);
    }

    friend Trop min(const Trop& a, const Trop& b) { return a < b ? a : b; }

    std::string str() const { return inf_ ? "inf" : v_.get_str(); }

private:
    bool inf_;
    Rat v_;
};

using TropicalPoint = std::vector<Trop>;

}  // namespace katz

#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <ostream>
#include <string>

#include "colorweyl/types.hpp"

namespace colorweyl {

// Exact rational scalar. Wraps mpq_class behind plain-value operators so Eigen
// never sees GMP expression templates. Canonical form (reduced, positive
// denominator) is maintained by GMP.
class Rat {
    mpq_class v_;

public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("DIV_ZERO", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::string str() const { return v_.get_str(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw Error("DIV_ZERO", "rational division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }
};

}  // namespace colorweyl

namespace Eigen {
template <>
struct NumTraits<colorweyl::Rat> {
    using Self = colorweyl::Rat;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
    static Self epsilon() { return Self(0); }
    static Self dummy_precision() { return Self(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen

#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>

#include "colorweyl/types.hpp"

namespace colorweyl {

// Residue scalar for a prime field with runtime modulus. Modulus 0 marks an
// integer literal that has not met the field yet (Eigen constructs 0/1 scalars
// with no context); arithmetic adopts the modulus of the other operand and
// rejects genuine mismatches.
class Zp {
    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;

    static std::int64_t red(std::int64_t x, std::uint32_t m) {
        if (m == 0) return x;
        x %= static_cast<std::int64_t>(m);
        if (x < 0) x += m;
        return x;
    }
    static std::uint32_t merge(const Zp& a, const Zp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw Error("MODULUS_MISMATCH", "residues mod " + std::to_string(a.p_) + " and " +
                                                std::to_string(b.p_));
        return a.p_ != 0 ? a.p_ : b.p_;
    }

public:
    Zp() = default;
    Zp(long n) : v_(n) {}
    Zp(int n) : v_(n) {}
    Zp(std::int64_t n, std::uint32_t p) : v_(red(n, p)), p_(p) {}

    std::int64_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return red(v_, p_) == 0; }
    std::string str() const { return std::to_string(red(v_, p_)); }

    friend Zp operator+(const Zp& a, const Zp& b) {
        std::uint32_t m = merge(a, b);
        return Zp(red(a.v_, m) + red(b.v_, m), m);
    }
    friend Zp operator-(const Zp& a, const Zp& b) {
        std::uint32_t m = merge(a, b);
        return Zp(red(a.v_, m) - red(b.v_, m), m);
    }
    friend Zp operator*(const Zp& a, const Zp& b) {
        std::uint32_t m = merge(a, b);
        return Zp(red(a.v_, m) * red(b.v_, m), m);
    }
    friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inv(); }
    Zp operator-() const { return Zp(-v_, p_); }
    Zp& operator+=(const Zp& o) { *this = *this + o; return *this; }
    Zp& operator-=(const Zp& o) { *this = *this - o; return *this; }
    Zp& operator*=(const Zp& o) { *this = *this * o; return *this; }
    Zp& operator/=(const Zp& o) { *this = *this / o; return *this; }

    Zp inv() const {
        if (p_ == 0) {
            // a modulus-free literal can only be inverted when it is +-1
            if (v_ == 1 || v_ == -1) return *this;
            throw Error("NO_MODULUS", "inverse of literal " + std::to_string(v_));
        }
        std::int64_t a = red(v_, p_);
        if (a == 0) throw Error("DIV_ZERO", "inverse of 0 mod " + std::to_string(p_));
        // extended Euclid
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        return Zp(t, p_);
    }

    friend bool operator==(const Zp& a, const Zp& b) {
        std::uint32_t m = merge(a, b);
        return red(a.v_, m) == red(b.v_, m);
    }
    friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.str(); }
};

}  // namespace colorweyl

namespace Eigen {
template <>
struct NumTraits<colorweyl::Zp> {
    using Self = colorweyl::Zp;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 5
    };
    static Self epsilon() { return Self(0); }
    static Self dummy_precision() { return Self(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen

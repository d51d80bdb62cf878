#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "colorweyl/rational.hpp"
#include "colorweyl/types.hpp"
#include "colorweyl/zp.hpp"

namespace colorweyl {

enum class FieldKind { rationals, prime };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint32_t p = 0;  // characteristic; 0 for the rationals

    std::uint32_t characteristic() const { return kind == FieldKind::prime ? p : 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const {
        return kind == FieldKind::rationals ? "rational" : "gf " + std::to_string(p);
    }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FieldSpec make_field(FieldKind kind, std::optional<std::uint32_t> p = std::nullopt) {
    if (kind == FieldKind::rationals) return {FieldKind::rationals, 0};
    if (!p) throw Error("NO_PRIME", "prime field needs a modulus");
    if (*p == 2) throw Error("CHAR_TWO", "characteristic 2 is excluded");
    if (!is_prime_u32(*p)) throw Error("NOT_PRIME", std::to_string(*p) + " is not prime");
    return {FieldKind::prime, *p};
}

// scalar adapters shared by all templated code

template <class K>
K scalar_from_int(long n, const FieldSpec& f);
template <>
inline Rat scalar_from_int<Rat>(long n, const FieldSpec&) { return Rat(n); }
template <>
inline Zp scalar_from_int<Zp>(long n, const FieldSpec& f) { return Zp(n, f.p); }

template <class K>
K scalar_from_fraction(long num, long den, const FieldSpec& f);
template <>
inline Rat scalar_from_fraction<Rat>(long num, long den, const FieldSpec&) { return Rat(num, den); }
template <>
inline Zp scalar_from_fraction<Zp>(long num, long den, const FieldSpec& f) {
    return Zp(num, f.p) / Zp(den, f.p);
}

inline Rat scalar_inv(const Rat& x) { return Rat(1) / x; }
inline Zp scalar_inv(const Zp& x) { return x.inv(); }

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

inline std::string scalar_str(const Rat& x) { return x.str(); }
inline std::string scalar_str(const Zp& x) { return x.str(); }

template <class K>
K scalar_pow(const K& base, long e) {
    K b = base;
    long n = e;
    if (n < 0) {
        b = scalar_inv(b);
        n = -n;
    }
    K r = K(1);
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

template <class K>
bool matches_field(const FieldSpec& f);
template <>
inline bool matches_field<Rat>(const FieldSpec& f) { return f.kind == FieldKind::rationals; }
template <>
inline bool matches_field<Zp>(const FieldSpec& f) { return f.kind == FieldKind::prime; }

}  // namespace colorweyl

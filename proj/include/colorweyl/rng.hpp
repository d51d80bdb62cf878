#pragma once

#include <cstdint>
#include <random>

#include "colorweyl/field.hpp"

namespace colorweyl {

// Deterministic RNG: fixed engine + hand-rolled draws, so identical seeds give
// identical verdicts on every platform.
class Rng {
    std::mt19937_64 eng_;

public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // inclusive bounds
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
};

template <class K>
K random_scalar(Rng& rng, const FieldSpec& f) {
    if (f.kind == FieldKind::prime) return scalar_from_int<K>(rng.uniform(0, f.p - 1), f);
    return scalar_from_int<K>(rng.uniform(-9, 9), f);
}

template <class K>
K random_nonzero_scalar(Rng& rng, const FieldSpec& f) {
    for (;;) {
        K x = random_scalar<K>(rng, f);
        if (!is_zero(x)) return x;
    }
}

}  // namespace colorweyl

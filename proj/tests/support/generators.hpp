#pragma once

// Random exact-rational inputs for property tests. Everything is driven by a
// caller-owned engine so failures reproduce from the seed.

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "entcat/rational.hpp"
#include "entcat/spectrum.hpp"

namespace entcat::gen {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long pick_denominator(Rng& rng) {
    static constexpr std::array<long, 12> kDenominators{4, 6, 8, 10, 12, 20, 24, 30, 40, 60, 100, 120};
    return kDenominators[static_cast<std::size_t>(pick(rng, 0, kDenominators.size() - 1))];
}

/// n nonnegative multiples of 1/d summing to 1, unsorted.
inline std::vector<Rational> random_distribution(Rng& rng, std::size_t n, long d) {
    std::vector<long> cuts{0, d};
    for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(pick(rng, 0, d));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.emplace_back(cuts[i + 1] - cuts[i], d);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

inline Spectrum4 random_spectrum(Rng& rng) {
    return make_spectrum(random_distribution(rng, 4, pick_denominator(rng)));
}

enum class Force { None, Eps1Zero, Eps3Zero };

struct StarPair {
    Spectrum4 source;
    Spectrum4 target;
    EpsilonTriple eps;
};

/// A canonical pair admitting a valid decomposition (eps1 >= 0, eps2 > 0,
/// eps3 >= 0), built by perturbing a random source and rejecting targets
/// that are not canonical.
inline StarPair random_star_pair(Rng& rng, Force force = Force::None) {
    for (;;) {
        const long d = pick_denominator(rng);
        const auto source = make_spectrum(random_distribution(rng, 4, d));
        const long step = 2 * d;  // eps live on a finer grid than the source
        auto units = [&](const Rational& r) { return (r * Rational(step)).num().get_si(); };
        const long a2 = units(source[1]);
        const long a4 = units(source[3]);
        if (a2 < 1) continue;
        const long k1 = force == Force::Eps1Zero ? 0 : pick(rng, 0, a2 - 1);
        const long k2 = pick(rng, 1, a2 - k1);
        const long k3 = force == Force::Eps3Zero ? 0 : pick(rng, 0, a4);
        EpsilonTriple eps{Rational(k1, step), Rational(k2, step), Rational(k3, step)};
        auto target = apply_epsilon(source, eps);
        if (target[3].sign() < 0 || target[0] < target[1] || target[1] < target[2] || target[2] < target[3]) {
            continue;
        }
        return {source, make_spectrum(target), eps};
    }
}

/// A random fraction in (lo, hi) with denominator up to max_den.
inline Rational random_open(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
    for (;;) {
        const long den = pick(rng, 1, max_den);
        const long num = pick(rng, 0, 10 * den);
        Rational r(num, den);
        if (r > lo && r < hi) return r;
    }
}

}  // namespace entcat::gen

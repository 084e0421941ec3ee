#include "entcat/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace entcat {

namespace {

void check_distribution(std::span<const Rational> values, std::string_view what) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(what) + ": no components");
    }
    for (const auto& v : values) {
        if (v.sign() < 0) {
            throw std::invalid_argument(std::string(what) + ": negative component " + v.str());
        }
    }
    Rational total = std::accumulate(values.begin(), values.end(), Rational(0));
    if (total != Rational(1)) {
        throw std::invalid_argument(std::string(what) + ": components sum to " + total.str() + ", not 1");
    }
}

}  // namespace

Spectrum4 make_spectrum(std::array<Rational, 4> values) {
    check_distribution(values, "spectrum");
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum4(std::move(values));
}

Spectrum4 make_spectrum(std::span<const Rational> values) {
    if (values.size() != 4) {
        throw std::invalid_argument("spectrum: expected 4 components, got " + std::to_string(values.size()));
    }
    return make_spectrum(std::array<Rational, 4>{values[0], values[1], values[2], values[3]});
}

CatalystSpectrum make_catalyst(std::vector<Rational> values) {
    check_distribution(values, "catalyst");
    std::sort(values.begin(), values.end(), std::greater<>());
    return CatalystSpectrum(std::move(values));
}

CatalystSpectrum two_qubit_catalyst(const Rational& p) {
    if (p < Rational(0) || p > Rational(1)) {
        throw std::invalid_argument("catalyst: p = " + p.str() + " outside [0, 1]");
    }
    return make_catalyst({p, Rational(1) - p});
}

std::string_view to_string(StarCondition c) {
    switch (c) {
        case StarCondition::LeadingCoefficient: return "leading_coefficient";
        case StarCondition::SecondPartialSum: return "second_partial_sum";
        case StarCondition::TrailingCoefficient: return "trailing_coefficient";
    }
    return "unknown";
}

Decomposition epsilon_decompose(const Spectrum4& source, const Spectrum4& target) {
    Rational eps1 = target[0] - source[0];
    Rational eps2 = (source[0] + source[1]) - (target[0] + target[1]);
    Rational eps3 = source[3] - target[3];
    if (eps1.sign() < 0) return StarCondition::LeadingCoefficient;
    if (eps2.sign() <= 0) return StarCondition::SecondPartialSum;
    if (eps3.sign() < 0) return StarCondition::TrailingCoefficient;
    return EpsilonTriple{std::move(eps1), std::move(eps2), std::move(eps3)};
}

bool satisfies_star(const Spectrum4& source, const Spectrum4& target) {
    return source[0] <= target[0]
        && source[0] + source[1] > target[0] + target[1]
        && source[3] >= target[3];
}

std::array<Rational, 4> apply_epsilon(const Spectrum4& source, const EpsilonTriple& eps) {
    return {
        source[0] + eps.eps1,
        source[1] - eps.eps1 - eps.eps2,
        source[2] + eps.eps2 + eps.eps3,
        source[3] - eps.eps3,
    };
}

}  // namespace entcat

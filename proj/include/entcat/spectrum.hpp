#pragma once

#include <array>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "entcat/rational.hpp"

namespace entcat {

/// Four Schmidt coefficients, sorted descending, nonnegative, summing to 1.
class Spectrum4 {
public:
    const Rational& operator[](std::size_t i) const { return alpha_[i]; }
    std::span<const Rational, 4> values() const { return alpha_; }

    friend bool operator==(const Spectrum4&, const Spectrum4&) = default;

private:
    friend Spectrum4 make_spectrum(std::array<Rational, 4> values);
    explicit Spectrum4(std::array<Rational, 4> alpha) : alpha_(std::move(alpha)) {}
    std::array<Rational, 4> alpha_;
};

/// Sorts into canonical order. Throws std::invalid_argument on a negative
/// entry or a total other than 1.
Spectrum4 make_spectrum(std::array<Rational, 4> values);
Spectrum4 make_spectrum(std::span<const Rational> values);

/// Catalyst Schmidt coefficients of any length n >= 1, sorted descending.
class CatalystSpectrum {
public:
    std::span<const Rational> values() const { return kappa_; }
    std::size_t size() const { return kappa_.size(); }
    const Rational& operator[](std::size_t i) const { return kappa_[i]; }

    friend bool operator==(const CatalystSpectrum&, const CatalystSpectrum&) = default;

private:
    friend CatalystSpectrum make_catalyst(std::vector<Rational> values);
    explicit CatalystSpectrum(std::vector<Rational> kappa) : kappa_(std::move(kappa)) {}
    std::vector<Rational> kappa_;
};

CatalystSpectrum make_catalyst(std::vector<Rational> values);

/// The two-qubit catalyst (p, 1-p). Requires 0 <= p <= 1.
CatalystSpectrum two_qubit_catalyst(const Rational& p);

struct EpsilonTriple {
    Rational eps1;
    Rational eps2;
    Rational eps3;

    friend bool operator==(const EpsilonTriple&, const EpsilonTriple&) = default;
};

/// Which inequality of the catalysis pattern a pair violates.
enum class StarCondition {
    LeadingCoefficient,  // a1 <= a1'
    SecondPartialSum,    // a1 + a2 > a1' + a2'
    TrailingCoefficient, // a4 >= a4'
};

std::string_view to_string(StarCondition c);

using Decomposition = std::variant<EpsilonTriple, StarCondition>;

/// eps1 = a1' - a1, eps2 = (a1 + a2) - (a1' + a2'), eps3 = a4 - a4'.
/// Succeeds iff eps1 >= 0, eps2 > 0, eps3 >= 0; otherwise names the first
/// violated condition in the order listed in StarCondition.
Decomposition epsilon_decompose(const Spectrum4& source, const Spectrum4& target);

bool satisfies_star(const Spectrum4& source, const Spectrum4& target);

/// Applies the four decomposition lines to the source.
std::array<Rational, 4> apply_epsilon(const Spectrum4& source, const EpsilonTriple& eps);

}  // namespace entcat

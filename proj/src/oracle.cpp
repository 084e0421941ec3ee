#include "entcat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "entcat/majorization.hpp"

namespace entcat {

AugmentedSpectrum augment(const Spectrum4& state, const CatalystSpectrum& catalyst) {
    AugmentedSpectrum out;
    out.beta.reserve(4 * catalyst.size());
    for (const auto& a : state.values()) {
        for (const auto& k : catalyst.values()) {
            out.beta.push_back(a * k);
        }
    }
    std::sort(out.beta.begin(), out.beta.end(), std::greater<>());
    return out;
}

bool oracle_valid_catalyst(const Spectrum4& source, const Spectrum4& target,
                           const CatalystSpectrum& catalyst) {
    return is_majorized_by(augment(source, catalyst).beta, augment(target, catalyst).beta);
}

namespace {

void check_grid(std::span<const Rational> grid) {
    for (const auto& p : grid) {
        if (p < Rational(1, 2) || p > Rational(1)) {
            throw std::invalid_argument("sweep: grid value " + p.str() + " outside [1/2, 1]");
        }
    }
}

SweepPoint evaluate(const Spectrum4& source, const Spectrum4& target, const Rational& p) {
    return {p, oracle_valid_catalyst(source, target, two_qubit_catalyst(p))};
}

}  // namespace

std::vector<SweepPoint> sweep(const Spectrum4& source, const Spectrum4& target,
                              std::span<const Rational> grid) {
    check_grid(grid);
    std::vector<SweepPoint> out(grid.size());
    const auto n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = evaluate(source, target, grid[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<SweepPoint> sweep_serial(const Spectrum4& source, const Spectrum4& target,
                                     std::span<const Rational> grid) {
    check_grid(grid);
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (const auto& p : grid) {
        out.push_back(evaluate(source, target, p));
    }
    return out;
}

std::vector<Rational> default_grid(long denominator, const std::optional<Interval>& interval) {
    if (denominator < 1) {
        throw std::invalid_argument("grid denominator must be positive");
    }
    std::vector<Rational> grid;
    if (denominator % 2 != 0) {
        grid.emplace_back(1, 2);
    }
    for (long k = (denominator + 1) / 2; k <= denominator; ++k) {
        grid.emplace_back(k, denominator);
    }
    if (interval) {
        for (const auto* endpoint : {&interval->lo, &interval->hi}) {
            if (*endpoint >= Rational(1, 2) && *endpoint <= Rational(1)) {
                grid.push_back(*endpoint);
            }
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    return grid;
}

}  // namespace entcat

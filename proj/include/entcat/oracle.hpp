#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entcat/catalysis.hpp"
#include "entcat/rational.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

/// All 4n products a_i * k_j of a state and a catalyst, sorted descending.
struct AugmentedSpectrum {
    std::vector<Rational> beta;
};

AugmentedSpectrum augment(const Spectrum4& state, const CatalystSpectrum& catalyst);

/// Brute-force test: augment both states with the catalyst and check
/// majorization directly. Accepts catalysts of any length.
bool oracle_valid_catalyst(const Spectrum4& source, const Spectrum4& target,
                           const CatalystSpectrum& catalyst);

struct SweepPoint {
    Rational p;
    bool valid = false;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

/// Oracle verdict for each p in `grid` with the catalyst (p, 1 - p), in grid
/// order. Grid points are evaluated in parallel. Throws std::invalid_argument
/// if any p lies outside [1/2, 1].
std::vector<SweepPoint> sweep(const Spectrum4& source, const Spectrum4& target,
                              std::span<const Rational> grid);

/// Single-threaded reference for sweep().
std::vector<SweepPoint> sweep_serial(const Spectrum4& source, const Spectrum4& target,
                                     std::span<const Rational> grid);

/// 1/2 followed by every k/d in (1/2, 1], ascending; 1/2 is always present
/// so odd denominators still cover the whole range. If `interval` is given,
/// its endpoints are merged in. Throws std::invalid_argument if d < 1.
std::vector<Rational> default_grid(long denominator, const std::optional<Interval>& interval = std::nullopt);

}  // namespace entcat

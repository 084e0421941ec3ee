#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entcat/rational.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

/// Cumulative sums of a vector taken in descending order.
struct PartialSums {
    std::vector<Rational> sums;
};

/// Sorts descending and accumulates. Throws std::invalid_argument on a
/// negative component.
PartialSums partial_sums(std::span<const Rational> values);

/// True iff every descending partial sum of `a` is <= that of `b`. Inputs are
/// re-sorted internally. Throws std::invalid_argument on a length or total
/// mismatch.
bool is_majorized_by(std::span<const Rational> a, std::span<const Rational> b);

/// 1-based index of the first partial sum where `a` exceeds `b`, if any.
/// Same preconditions as is_majorized_by.
std::optional<std::size_t> first_majorization_violation(std::span<const Rational> a,
                                                        std::span<const Rational> b);

/// LOCC convertibility for states sharing a Schmidt basis: source ≺ target.
bool locc_possible(const Spectrum4& source, const Spectrum4& target);

struct LorenzPoint {
    Rational fraction;    // k / n
    Rational cumulative;  // sum of the k largest components
};

/// (k/n, lambda_k) for k = 0..n, starting at (0, 0).
std::vector<LorenzPoint> lorenz_points(std::span<const Rational> values);

}  // namespace entcat

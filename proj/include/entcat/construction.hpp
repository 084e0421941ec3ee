#pragma once

#include <string_view>

#include "entcat/rational.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

enum class ConstructionBranch { SmallM, LargeM };  // m0 <= 1, m0 > 1

std::string_view to_string(ConstructionBranch b);

/// A state pair whose bounds are exactly m = m0 and M = M0.
struct ConstructionResult {
    Spectrum4 source;
    Spectrum4 target;
    Rational mu;
    Rational a;
    ConstructionBranch branch;
};

/// Admissible perturbation size for (m0, M0). Starts at half the branch
/// bound
///   m0 <= 1: min((1 - M0)/(2(1 + M0)), (1 - m0/2)/(2(1 + 2 M0)))
///   m0 >  1: min((1 - M0)/(2(1 + M0)), 1/(4(1 + 2 M0)))
/// and halves until the constructed pair is canonical and reproduces
/// (m0, M0) exactly. The branch bound alone does not guarantee a1 >= a2, nor
/// the ordering and m identity for large m0.
/// Throws std::invalid_argument unless m0 > 0 and 0 < M0 < 1.
Rational choose_mu(const Rational& m0, const Rational& M0);

/// Builds the pair with mu from choose_mu().
ConstructionResult construct_states(const Rational& m0, const Rational& M0);

/// Builds the pair with a caller-chosen mu. Throws std::invalid_argument if
/// the domain is invalid or mu does not yield a canonical pair with
/// m = m0 and M = M0.
ConstructionResult construct_states(const Rational& m0, const Rational& M0, const Rational& mu);

}  // namespace entcat

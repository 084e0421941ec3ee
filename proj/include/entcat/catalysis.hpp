#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "entcat/rational.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

// Throughout, r = (1 - p) / p for the two-qubit catalyst (p, 1 - p).

/// Raised when the tail ratio (a4 - eps3) / (a3 + eps3) is 0/0, which happens
/// exactly when a3 = a4 = 0 and eps3 = 0.
class DegenerateRatio : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lower bound on r:
///   max((a2 - e1)/(a1 + e1), (a4 - e3)/(a3 + e3), e2/e1), or +inf when e1 = 0.
/// Throws DegenerateRatio for the 0/0 tail ratio when e1 > 0.
ExtendedRational compute_m(const Spectrum4& alpha, const EpsilonTriple& eps);

/// Upper bound on r: min((a3 + e3)/(a2 - e1), e3/e2). Zero when e3 = 0.
Rational compute_M(const Spectrum4& alpha, const EpsilonTriple& eps);

enum class Verdict { LoccAlreadyPossible, Catalyzable, Infeasible };

std::string_view to_string(Verdict v);

struct EmptyInterval {};

using InfeasibleReason = std::variant<StarCondition, EmptyInterval>;

struct Interval {
    Rational lo;
    Rational hi;
};

struct FeasibilityReport {
    Verdict verdict = Verdict::Infeasible;
    std::optional<EpsilonTriple> eps;
    std::optional<ExtendedRational> m;
    std::optional<Rational> M;
    std::optional<Interval> r_interval;
    std::optional<Interval> p_interval;
    std::optional<InfeasibleReason> reason;
    // Set when a3 = a4 = eps3 = 0; m is then taken over the remaining ratios,
    // and M = 0 makes the pair infeasible regardless.
    bool tail_ratio_undefined = false;
};

/// Full decision procedure for a two-qubit catalyst: plain LOCC first, then
/// the epsilon decomposition, then m <= M.
FeasibilityReport analyze(const Spectrum4& source, const Spectrum4& target);

/// Whether (p, 1 - p) catalyzes source -> target, from the m <= r <= M test.
/// Pairs already convertible under LOCC report true; pairs outside the
/// catalysis pattern report false. Throws std::invalid_argument unless
/// 1/2 <= p <= 1.
bool is_valid_catalyst(const Spectrum4& source, const Spectrum4& target, const Rational& p);
bool is_valid_catalyst(const FeasibilityReport& report, const Rational& p);

/// Closed forms for the eight descending partial sums of target (x) (p, 1-p),
/// written in terms of the source and eps. Only valid for m <= r <= M;
/// throws std::invalid_argument otherwise.
std::array<Rational, 8> closed_form_lambda_prime(const Spectrum4& source, const EpsilonTriple& eps,
                                                 const Rational& p);

}  // namespace entcat

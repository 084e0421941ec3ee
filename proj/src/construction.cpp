#include "entcat/construction.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#include "entcat/catalysis.hpp"

namespace entcat {

namespace {

constexpr int kMaxHalvings = 512;

void check_domain(const Rational& m0, const Rational& M0) {
    if (m0.sign() <= 0) {
        throw std::invalid_argument("construct: m0 = " + m0.str() + " must be positive");
    }
    if (M0.sign() <= 0 || M0 >= Rational(1)) {
        throw std::invalid_argument("construct: M0 = " + M0.str() + " must lie in (0, 1)");
    }
}

ConstructionBranch branch_of(const Rational& m0) {
    return m0 <= Rational(1) ? ConstructionBranch::SmallM : ConstructionBranch::LargeM;
}

Rational branch_bound(const Rational& m0, const Rational& M0) {
    const Rational one(1);
    const Rational half(1, 2);
    Rational first = half * (one - M0) / (one + M0);
    Rational second = branch_of(m0) == ConstructionBranch::SmallM
        ? half * (one - m0 / Rational(2)) / (one + Rational(2) * M0)
        : half * half / (one + Rational(2) * M0);
    return min(first, second);
}

bool descending_nonnegative(const std::array<Rational, 4>& v) {
    return v[3].sign() >= 0 && v[0] >= v[1] && v[1] >= v[2] && v[2] >= v[3];
}

// Returns the pair if every ConstructionResult invariant holds.
std::optional<ConstructionResult> try_build(const Rational& m0, const Rational& M0, const Rational& mu) {
    const auto branch = branch_of(m0);
    // The large-m0 branch keeps the target at (1, 1/2, 1/2, 1/4) shape, so
    // normalization forces a = 4/9.
    const Rational half_m = branch == ConstructionBranch::SmallM ? m0 / Rational(2) : Rational(1, 2);
    const Rational quarter_m2 = half_m * half_m;
    const Rational a = branch == ConstructionBranch::SmallM
        ? Rational(4) / ((m0 + Rational(2)) * (m0 + Rational(2)))
        : Rational(4, 9);
    const Rational one(1);

    std::array<Rational, 4> source{
        a * (one - mu),
        a * (half_m + (m0 + one) * mu),
        a * (half_m - (M0 + one) * m0 * mu),
        a * (quarter_m2 + M0 * m0 * mu),
    };
    std::array<Rational, 4> target{a, a * half_m, a * half_m, a * quarter_m2};

    if (mu.sign() <= 0 || !descending_nonnegative(source) || !descending_nonnegative(target)) {
        return std::nullopt;
    }
    ConstructionResult out{make_spectrum(source), make_spectrum(target), mu, a, branch};
    const auto decomposition = epsilon_decompose(out.source, out.target);
    const auto* eps = std::get_if<EpsilonTriple>(&decomposition);
    if (eps == nullptr) {
        return std::nullopt;
    }
    try {
        if (compute_m(out.source, *eps) != m0 || compute_M(out.source, *eps) != M0) {
            return std::nullopt;
        }
    } catch (const DegenerateRatio&) {
        return std::nullopt;
    }
    return out;
}

}  // namespace

std::string_view to_string(ConstructionBranch b) {
    return b == ConstructionBranch::SmallM ? "m0_le_1" : "m0_gt_1";
}

Rational choose_mu(const Rational& m0, const Rational& M0) {
    check_domain(m0, M0);
    Rational mu = branch_bound(m0, M0) / Rational(2);
    for (int i = 0; i < kMaxHalvings; ++i) {
        if (try_build(m0, M0, mu)) {
            return mu;
        }
        mu /= Rational(2);
    }
    throw std::logic_error("choose_mu: no admissible mu found for m0 = " + m0.str() + ", M0 = " + M0.str());
}

ConstructionResult construct_states(const Rational& m0, const Rational& M0) {
    return construct_states(m0, M0, choose_mu(m0, M0));
}

ConstructionResult construct_states(const Rational& m0, const Rational& M0, const Rational& mu) {
    check_domain(m0, M0);
    auto built = try_build(m0, M0, mu);
    if (!built) {
        throw std::invalid_argument("construct: mu = " + mu.str() + " is not admissible for m0 = " + m0.str() +
                                    ", M0 = " + M0.str());
    }
    return std::move(*built);
}

}  // namespace entcat

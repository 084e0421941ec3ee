#include "entcat/majorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace entcat {

PartialSums partial_sums(std::span<const Rational> values) {
    std::vector<Rational> sorted(values.begin(), values.end());
    for (const auto& v : sorted) {
        if (v.sign() < 0) {
            throw std::invalid_argument("partial_sums: negative component " + v.str());
        }
    }
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    PartialSums out;
    out.sums.reserve(sorted.size());
    Rational running;
    for (const auto& v : sorted) {
        running += v;
        out.sums.push_back(running);
    }
    return out;
}

std::optional<std::size_t> first_majorization_violation(std::span<const Rational> a,
                                                        std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("majorization: length mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    if (a.empty()) {
        return std::nullopt;
    }
    const auto lhs = partial_sums(a);
    const auto rhs = partial_sums(b);
    if (lhs.sums.back() != rhs.sums.back()) {
        throw std::invalid_argument("majorization: total mismatch (" + lhs.sums.back().str() + " vs " +
                                    rhs.sums.back().str() + ")");
    }
    for (std::size_t k = 0; k < lhs.sums.size(); ++k) {
        if (lhs.sums[k] > rhs.sums[k]) {
            return k + 1;
        }
    }
    return std::nullopt;
}

bool is_majorized_by(std::span<const Rational> a, std::span<const Rational> b) {
    return !first_majorization_violation(a, b).has_value();
}

bool locc_possible(const Spectrum4& source, const Spectrum4& target) {
    return is_majorized_by(source.values(), target.values());
}

std::vector<LorenzPoint> lorenz_points(std::span<const Rational> values) {
    const auto ps = partial_sums(values);
    const long n = static_cast<long>(values.size());
    std::vector<LorenzPoint> out;
    out.reserve(ps.sums.size() + 1);
    out.push_back({Rational(0), Rational(0)});
    for (long k = 1; k <= n; ++k) {
        out.push_back({Rational(k, n), ps.sums[static_cast<std::size_t>(k - 1)]});
    }
    return out;
}

}  // namespace entcat

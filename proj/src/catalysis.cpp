#include "entcat/catalysis.hpp"

#include "entcat/majorization.hpp"

namespace entcat {

namespace {

std::optional<Rational> tail_ratio(const Spectrum4& a, const EpsilonTriple& e) {
    Rational num = a[3] - e.eps3;
    Rational den = a[2] + e.eps3;
    if (den.is_zero()) {
        // den = 0 forces a4 = 0 and eps3 = 0
        return std::nullopt;
    }
    return num / den;
}

ExtendedRational lower_bound(const Spectrum4& a, const EpsilonTriple& e, bool& tail_undefined) {
    tail_undefined = false;
    if (e.eps1.is_zero()) {
        return ExtendedRational::infinity();
    }
    // a1 + e1 = a1' > 0 for any normalized target
    Rational m = max((a[1] - e.eps1) / (a[0] + e.eps1), e.eps2 / e.eps1);
    if (auto t = tail_ratio(a, e)) {
        m = max(m, *t);
    } else {
        tail_undefined = true;
    }
    return m;
}

Rational r_of(const Rational& p) { return (Rational(1) - p) / p; }

void require_p_range(const Rational& p) {
    if (p < Rational(1, 2) || p > Rational(1)) {
        throw std::invalid_argument("catalyst parameter p = " + p.str() + " outside [1/2, 1]");
    }
}

}  // namespace

ExtendedRational compute_m(const Spectrum4& alpha, const EpsilonTriple& eps) {
    bool tail_undefined = false;
    auto m = lower_bound(alpha, eps, tail_undefined);
    if (tail_undefined) {
        throw DegenerateRatio("compute_m: (a4 - eps3)/(a3 + eps3) is 0/0");
    }
    return m;
}

Rational compute_M(const Spectrum4& alpha, const EpsilonTriple& eps) {
    Rational den = alpha[1] - eps.eps1;
    if (den.sign() <= 0 || eps.eps2.sign() <= 0) {
        throw std::logic_error("compute_M: not a valid decomposition (a2 - eps1 = " + den.str() +
                               ", eps2 = " + eps.eps2.str() + ")");
    }
    return min((alpha[2] + eps.eps3) / den, eps.eps3 / eps.eps2);
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::LoccAlreadyPossible: return "LoccAlreadyPossible";
        case Verdict::Catalyzable: return "Catalyzable";
        case Verdict::Infeasible: return "Infeasible";
    }
    return "unknown";
}

FeasibilityReport analyze(const Spectrum4& source, const Spectrum4& target) {
    FeasibilityReport report;
    if (locc_possible(source, target)) {
        report.verdict = Verdict::LoccAlreadyPossible;
        return report;
    }
    auto decomposition = epsilon_decompose(source, target);
    if (auto* violated = std::get_if<StarCondition>(&decomposition)) {
        report.verdict = Verdict::Infeasible;
        report.reason = *violated;
        return report;
    }
    const auto& eps = std::get<EpsilonTriple>(decomposition);
    report.eps = eps;
    report.m = lower_bound(source, eps, report.tail_ratio_undefined);
    report.M = compute_M(source, eps);

    if (*report.m <= *report.M) {
        const Rational& m = report.m->value();
        const Rational& M = *report.M;
        report.verdict = Verdict::Catalyzable;
        report.r_interval = Interval{m, M};
        report.p_interval = Interval{Rational(1) / (Rational(1) + M), Rational(1) / (Rational(1) + m)};
    } else {
        report.verdict = Verdict::Infeasible;
        report.reason = EmptyInterval{};
    }
    return report;
}

bool is_valid_catalyst(const FeasibilityReport& report, const Rational& p) {
    require_p_range(p);
    switch (report.verdict) {
        case Verdict::LoccAlreadyPossible: return true;
        case Verdict::Infeasible: return false;
        case Verdict::Catalyzable: break;
    }
    const Rational r = r_of(p);
    return report.r_interval->lo <= r && r <= report.r_interval->hi;
}

bool is_valid_catalyst(const Spectrum4& source, const Spectrum4& target, const Rational& p) {
    require_p_range(p);
    return is_valid_catalyst(analyze(source, target), p);
}

std::array<Rational, 8> closed_form_lambda_prime(const Spectrum4& a, const EpsilonTriple& e,
                                                 const Rational& p) {
    require_p_range(p);
    const Rational r = r_of(p);
    bool tail_undefined = false;
    const auto m = lower_bound(a, e, tail_undefined);
    const auto M = compute_M(a, e);
    if (tail_undefined || m > r || r > M) {
        throw std::invalid_argument("closed_form_lambda_prime: r = " + r.str() + " outside [" + m.str() +
                                    ", " + M.str() + "]");
    }
    const Rational q = Rational(1) - p;
    const Rational head = a[0] + a[1] + a[2];
    return {
        a[0] * p + e.eps1 * p,
        a[0] + e.eps1,
        a[0] + a[1] * p + e.eps1 * q - e.eps2 * p,
        a[0] + a[1] * p + a[2] * p + e.eps1 * q + e.eps3 * p,
        a[0] + a[1] + a[2] * p - e.eps2 * q + e.eps3 * p,
        head + e.eps3,
        head + a[3] * p + e.eps3 * q,
        head + a[3],
    };
}

}  // namespace entcat

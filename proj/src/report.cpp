#include "entcat/report.hpp"

namespace entcat {

Json to_json(const Rational& r) {
    const auto dec = to_decimal(r);
    return Json{{"exact", r.str()}, {"decimal", dec.text}, {"approximate", dec.approximate}};
}

Json to_json(const ExtendedRational& r) {
    if (r.is_infinite()) {
        return Json{{"exact", "inf"}, {"decimal", "inf"}, {"approximate", false}};
    }
    return to_json(r.value());
}

Json to_json(const EpsilonTriple& eps) {
    return Json{{"eps1", to_json(eps.eps1)}, {"eps2", to_json(eps.eps2)}, {"eps3", to_json(eps.eps3)}};
}

Json to_json(const Interval& interval) {
    return Json{{"lo", to_json(interval.lo)}, {"hi", to_json(interval.hi)}};
}

Json exact_array(std::span<const Rational> values) {
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(v.str());
    }
    return out;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

Json reason_json(const std::optional<InfeasibleReason>& reason) {
    if (!reason) {
        return nullptr;
    }
    if (const auto* star = std::get_if<StarCondition>(&*reason)) {
        return Json{{"kind", "StarViolated"}, {"condition", std::string(to_string(*star))}};
    }
    return Json{{"kind", "EmptyInterval"}};
}

}  // namespace

Json to_json(const FeasibilityReport& report) {
    return Json{
        {"verdict", std::string(to_string(report.verdict))},
        {"eps", optional_json(report.eps)},
        {"m", optional_json(report.m)},
        {"M", optional_json(report.M)},
        {"r_interval", optional_json(report.r_interval)},
        {"p_interval", optional_json(report.p_interval)},
        {"reason", reason_json(report.reason)},
        {"tail_ratio_undefined", report.tail_ratio_undefined},
    };
}

Json to_json(const ConstructionResult& result) {
    return Json{
        {"branch", std::string(to_string(result.branch))},
        {"mu", to_json(result.mu)},
        {"a", to_json(result.a)},
        {"source", exact_array(result.source.values())},
        {"target", exact_array(result.target.values())},
    };
}

void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points) {
    os << "p,p_decimal,valid\n";
    for (const auto& pt : points) {
        os << pt.p.str() << ',' << to_decimal(pt.p).text << ',' << (pt.valid ? 1 : 0) << '\n';
    }
}

void write_lorenz_csv(std::ostream& os, std::span<const LorenzPoint> points) {
    os << "k_over_n,lambda,lambda_decimal\n";
    for (const auto& pt : points) {
        os << pt.fraction.str() << ',' << pt.cumulative.str() << ',' << to_decimal(pt.cumulative).text << '\n';
    }
}

}  // namespace entcat

#include "entcat/rational.hpp"

#include <algorithm>
#include <cctype>

namespace entcat {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

const Rational& ExtendedRational::value() const {
    if (!value_) {
        throw std::logic_error("extended rational: value() on +inf");
    }
    return *value_;
}

std::string ExtendedRational::str() const {
    return value_ ? value_->str() : "inf";
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const Rational& b) {
    if (a.is_infinite()) {
        return std::strong_ordering::greater;
    }
    return *a.value_ <=> b;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
    return os << r.str();
}

namespace {

bool all_digits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void malformed(std::string_view text) {
    throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");
}

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty() || !all_digits(digits)) {
        malformed(whole);
    }
    return BigInt(std::string(digits), 10);
}

BigInt power_of_ten(std::size_t exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) {
        malformed(text);
    }

    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash), text);
        BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
        }
        out = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
            malformed(text);
        }
        std::string digits = std::string(whole) + std::string(frac);
        out = Rational(BigInt(digits, 10), power_of_ten(frac.size()));
    } else {
        out = Rational(parse_integer(body, text), BigInt(1));
    }
    return negative ? -out : out;
}

Rational mediant(const FractionPair& a, const FractionPair& b) {
    if (a.den <= 0 || b.den <= 0) {
        throw std::invalid_argument("mediant: denominators must be positive");
    }
    if (a.num < 0 || b.num < 0) {
        throw std::invalid_argument("mediant: numerators must be nonnegative");
    }
    return Rational(BigInt(a.num + b.num), BigInt(a.den + b.den));
}

Rational mediant(const Rational& a, const Rational& b) {
    return mediant(FractionPair{a.num(), a.den()}, FractionPair{b.num(), b.den()});
}

DecimalRendering to_decimal(const Rational& r, unsigned digits) {
    BigInt den = r.den();
    unsigned twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), BigInt(2).get_mpz_t());
    unsigned fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), BigInt(5).get_mpz_t());
    const bool terminating = den == 1;
    const std::size_t places = terminating ? std::max(twos, fives) : digits;

    BigInt scaled_abs = abs(r.num()) * power_of_ten(places);
    BigInt q;
    if (terminating) {
        q = scaled_abs / r.den();
    } else {
        // round half up
        q = (2 * scaled_abs + r.den()) / (2 * r.den());
    }
    std::string s = q.get_str();
    if (s.size() <= places) {
        s.insert(0, places + 1 - s.size(), '0');
    }
    if (places > 0) {
        s.insert(s.size() - places, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (r.sign() < 0 && s != "0") {
        s.insert(0, "-");
    }
    return {s, !terminating};
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace entcat

#include "sblab/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace sblab {

namespace {

BigInt parse_integer(std::string_view part, bool allow_sign, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
        negative = part[0] == '-';
        i = 1;
    }
    if (i == part.size())
        throw std::invalid_argument("Rational: cannot parse '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < part.size(); ++i) {
        const char c = part[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("Rational: cannot parse '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0)
        throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, true, text));
    BigInt num = parse_integer(text.substr(0, slash), true, text);
    BigInt den = parse_integer(text.substr(slash + 1), false, text);
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const BigInt l = lhs.num_ * rhs.den_;
    const BigInt r = rhs.num_ * lhs.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (r < l)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

} // namespace sblab

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sblab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-magnitude integers.
///
/// Always stored reduced with a positive denominator. Arithmetic and
/// comparison are integer-exact; nothing here touches floating point
/// except the explicit to_double() conversion used for display.
class Rational {
  public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(BigInt value) : num_(std::move(value)) {}
    /// Throws std::domain_error if denominator == 0.
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "num" or "num/den" (optional leading '-', den > 0).
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Wire format: "num/den", or just "num" when the value is an integer.
    std::string str() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error when dividing by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    // Values are canonical, so field comparison is exact equality.
    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

  private:
    void reduce();

    BigInt num_{0};
    BigInt den_{1};
};

} // namespace sblab

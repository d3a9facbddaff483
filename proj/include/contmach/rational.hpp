#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace contmach {

/// Exact rational number. Always kept in canonical form (denominator > 0,
/// numerator and denominator coprime).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    static Rational power_of_two(long exponent);

    /// Parses "p/q", an integer, or a decimal literal such as "-0.125" or
    /// "1.5e-3". Conversion is exact. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// Canonical "p/q" form; integers are written with denominator 1.
    std::string to_string() const;

    const mpq_class& get() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational abs() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// floor(x), exact.
    Rational floor() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Thrown when an arithmetic operation needs a nonzero divisor.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

} // namespace contmach

#include "contmach/rational.hpp"

#include <cctype>

namespace contmach {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
    std::string buf(s);
    if (!buf.empty() && buf.front() == '+') {
        buf.erase(0, 1);
    }
    return mpz_class(buf, 10);
}

mpz_class pow10(unsigned long exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        if (!is_integer_literal(exp_part) || exp_part.size() > 9) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        exponent = std::stol(std::string(exp_part));
        s = s.substr(0, e);
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    mpq_class value;
    if (exponent >= 0) {
        value = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
    } else {
        value = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
    }
    value.canonicalize();
    if (negative) {
        value = -value;
    }
    return Rational(value);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::power_of_two(long exponent) {
    mpz_class p = 1;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
    return exponent >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("malformed rational: empty string");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        mpz_class d = parse_integer(den);
        if (d == 0) {
            throw std::invalid_argument("malformed rational (zero denominator): " + std::string(text));
        }
        return Rational(mpq_class(parse_integer(num), d));
    }
    if (is_integer_literal(text)) {
        return Rational(mpq_class(parse_integer(text)));
    }
    return parse_decimal(text);
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(a.value_ / b.value_));
}
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

} // namespace contmach

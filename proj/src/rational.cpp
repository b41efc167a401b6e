#include "rmt/rational.hpp"

#include <ostream>

#include "rmt/errors.hpp"

namespace rmt {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    if (s.empty()) {
        throw DomainError("cannot parse empty string as a rational");
    }
    const auto slash = s.find('/');
    const auto parse_int = [&](const std::string& part) {
        std::string digits = part;
        if (!digits.empty() && digits.front() == '+') digits.erase(digits.begin());
        const bool ok = !digits.empty() &&
                        digits.find_first_not_of("0123456789", digits.front() == '-' ? 1 : 0) ==
                            std::string::npos &&
                        digits != "-";
        if (!ok) {
            throw DomainError("cannot parse '" + std::string(text) + "' as a rational");
        }
        return Integer(digits, 10);
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(s));
    }
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DomainError("division by zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer factorial(long n) {
    if (n < 0) {
        throw DomainError("factorial of a negative integer");
    }
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Rational inverse_factorial(long n) {
    if (n < 0) return Rational(0);
    return Rational(Integer(1), factorial(n));
}

Rational rising(const Rational& x, long k) {
    if (k < 0) {
        throw DomainError("rising factorial with negative length");
    }
    Rational result(1);
    for (long i = 0; i < k; ++i) result *= x + Rational(i);
    return result;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational binomial(const Rational& x, long k) {
    if (k < 0) return Rational(0);
    Rational result(1);
    for (long i = 0; i < k; ++i) result *= x - Rational(i);
    return result / Rational(factorial(k));
}

}  // namespace rmt

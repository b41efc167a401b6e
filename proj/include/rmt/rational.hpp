#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rmt {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1, so structural equality is numeric equality.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& numerator, const Integer& denominator);

    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "a", "-a", "a/b" (b may be negative; the result is canonical).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "num/den", or just "num" for integers.
    std::string str() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }
    const mpq_class& raw() const { return value_; }

    Rational abs() const;
    Rational inverse() const;
    /// Integer power; negative exponents require a non-zero base.
    Rational pow(long exponent) const;

    Rational& operator+=(const Rational& other) {
        value_ += other.value_;
        return *this;
    }
    Rational& operator-=(const Rational& other) {
        value_ -= other.value_;
        return *this;
    }
    Rational& operator*=(const Rational& other) {
        value_ *= other.value_;
        return *this;
    }
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! for n >= 0; throws DomainError for negative n.
Integer factorial(long n);

/// 1/n!, with the usual convention 1/n! = 0 for negative n.
Rational inverse_factorial(long n);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), k >= 0.
Rational rising(const Rational& x, long k);

/// Binomial coefficient with integer arguments; 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Generalized binomial coefficient x (x-1) ... (x-k+1) / k!.
Rational binomial(const Rational& x, long k);

}  // namespace rmt

#pragma once

#include <string>

#include "rmt/rational.hpp"

namespace rmt {

/// Binary floating point with a fixed precision (MPFR), used where exact
/// factorial ratios have to be compared against transcendental factors.
class BigFloat {
public:
    static constexpr long kDefaultBits = 200;

    explicit BigFloat(long bits = kDefaultBits);
    BigFloat(const Rational& value, long bits = kDefaultBits);  // NOLINT(google-explicit-constructor)
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long bits() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);

    BigFloat abs() const;
    BigFloat log() const;
    BigFloat exp() const;
    BigFloat pow(const BigFloat& exponent) const;

    double to_double() const;
    std::string str(int digits = 20) const;

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace rmt

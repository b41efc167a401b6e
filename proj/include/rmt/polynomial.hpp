#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rmt/rational.hpp"

namespace rmt {

/// Dense univariate polynomial with exact rational coefficients, indexed by
/// degree. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static Polynomial monomial(const Rational& coefficient, std::size_t degree);
    static Polynomial variable() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    /// Coefficient of t^k; zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    Rational leading() const;

    Rational evaluate(const Rational& t) const;
    Rational operator()(const Rational& t) const { return evaluate(t); }
    Polynomial derivative() const;
    /// p(-t).
    Polynomial reflected() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Unique polynomial of degree < xs.size() through the given points.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace rmt

#include "rmt/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "rmt/errors.hpp"

namespace rmt {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coefficients_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coefficients_.back(); }

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<Rational> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = coefficients_[k] * Rational(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
    auto c = coefficients_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
            product[i + j] += coefficients_[i] * other.coefficients_[j];
        }
    }
    coefficients_ = std::move(product);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    for (auto& c : coefficients_) c *= scalar;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial result = *this;
    for (auto& c : result.coefficients_) c = -c;
    return result;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coefficients_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational a = c.abs();
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) {
        throw DimensionError("interpolate: node and value counts differ");
    }
    Polynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Polynomial(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += basis * (ys[i] / denom);
    }
    return result;
}

}  // namespace rmt

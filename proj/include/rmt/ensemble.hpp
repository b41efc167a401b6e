#pragma once

#include <string>

#include "rmt/rational.hpp"

namespace rmt {

enum class Family { Hermite, Laguerre, Jacobi };

/// One of the three unitary ensembles at matrix size N, with its weight
/// parameters:
///   GUE  w(x) = exp(-N x^2 / 2)           on R
///   LUE  w(x) = x^γ exp(-2 N x)           on R+, γ > -1
///   JUE  w(x) = x^γ1 (1 - x)^γ2           on [0, 1], γ1, γ2 > -1
/// Exact computations accept rational parameters only.
struct EnsembleSpec {
    Family kind = Family::Hermite;
    int N = 1;
    Rational gamma;   // LUE
    Rational gamma1;  // JUE
    Rational gamma2;  // JUE

    static EnsembleSpec gue(int N);
    static EnsembleSpec lue(int N, const Rational& gamma);
    static EnsembleSpec jue(int N, const Rational& gamma1, const Rational& gamma2);

    /// Same weight, different matrix size.
    EnsembleSpec with_size(int size) const;

    /// Throws DomainError when N < 1 or a parameter is <= -1.
    void validate() const;

    /// "GUE", "LUE", "JUE".
    std::string name() const;
    /// Stable key including parameters, e.g. "LUE(N=3,gamma=1/2)".
    std::string key() const;

    friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

std::string family_name(Family f);

}  // namespace rmt

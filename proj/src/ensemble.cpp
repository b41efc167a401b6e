#include "rmt/ensemble.hpp"

#include "rmt/errors.hpp"

namespace rmt {

EnsembleSpec EnsembleSpec::gue(int N) {
    EnsembleSpec s;
    s.kind = Family::Hermite;
    s.N = N;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::lue(int N, const Rational& gamma) {
    EnsembleSpec s;
    s.kind = Family::Laguerre;
    s.N = N;
    s.gamma = gamma;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::jue(int N, const Rational& gamma1, const Rational& gamma2) {
    EnsembleSpec s;
    s.kind = Family::Jacobi;
    s.N = N;
    s.gamma1 = gamma1;
    s.gamma2 = gamma2;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::with_size(int size) const {
    EnsembleSpec s = *this;
    s.N = size;
    s.validate();
    return s;
}

void EnsembleSpec::validate() const {
    if (N < 1) throw DomainError("matrix size N must be at least 1");
    const Rational minus_one(-1);
    if (kind == Family::Laguerre && gamma <= minus_one) {
        throw DomainError("Laguerre parameter gamma must exceed -1");
    }
    if (kind == Family::Jacobi && (gamma1 <= minus_one || gamma2 <= minus_one)) {
        throw DomainError("Jacobi parameters gamma1, gamma2 must exceed -1");
    }
}

std::string EnsembleSpec::name() const {
    switch (kind) {
        case Family::Hermite: return "GUE";
        case Family::Laguerre: return "LUE";
        case Family::Jacobi: return "JUE";
    }
    return "?";
}

std::string EnsembleSpec::key() const {
    std::string k = name() + "(N=" + std::to_string(N);
    if (kind == Family::Laguerre) k += ",gamma=" + gamma.str();
    if (kind == Family::Jacobi) k += ",gamma1=" + gamma1.str() + ",gamma2=" + gamma2.str();
    return k + ")";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Hermite: return "H";
        case Family::Laguerre: return "L";
        case Family::Jacobi: return "J";
    }
    return "?";
}

}  // namespace rmt

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/partition.hpp"

namespace rmt {

/// E[Π_i det(t_i - M)^p]: `points` are the t_i, each raised to `power`.
struct MomentFunctional {
    int power = 1;
    std::vector<double> points;
};

/// E[Π_j sc_{λ_j}(M)].
struct SecularFunctional {
    Partition lambda;
};

/// E[(1/N) Tr M^k].
struct TraceFunctional {
    int power = 2;
};

using Functional = std::variant<MomentFunctional, SecularFunctional, TraceFunctional>;

std::string describe(const Functional& f);

/// LUE and JUE samplers need non-negative integer parameters.
struct MCConfig {
    EnsembleSpec spec;
    long samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct MCEstimate {
    std::string functional;
    double mean = 0;
    double stderr_ = 0;  // sample standard deviation / sqrt(samples)
    long samples = 0;
    bool overflowed = false;
};

/// Samples per independent stream chunk; results do not depend on workers.
inline constexpr long kChunkSize = 1024;

/// Eigenvalues of one matrix drawn from the ensemble:
///   GUE  Hermitian, diagonal N(0, 1/N), off-diagonal real/imag N(0, 1/(2N))
///   LUE  eig(G G^†) / (2N), G complex Gaussian N x (N + γ)
///   JUE  eig((A+B)^{-1} A), A, B complex Wisharts of widths N+γ1, N+γ2
/// DomainError for non-integer LUE/JUE parameters.
std::vector<double> sample_spectrum(const EnsembleSpec& spec, std::mt19937_64& rng);

/// Per-sample stream seed, a splitmix64 hash of (seed, index).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Value of the functional at one spectrum.
double evaluate(const Functional& f, const std::vector<double>& eigenvalues, bool& overflowed);

/// Streaming mean and standard error. Chunks are merged in a fixed
/// pairwise tree, so identical configs give bit-identical results for
/// any number of workers.
MCEstimate estimate(const MCConfig& config, const Functional& f);

}  // namespace rmt

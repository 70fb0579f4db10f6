#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wishart/dimensions.hpp"
#include "wishart/pep.hpp"

namespace wishart {

/// One draw of the M x N channel: i.i.d. circularly-symmetric complex
/// Gaussian entries with unit total variance (1/2 per real component),
/// derived purely from (seed, sample index).
struct ChannelSample {
    int rows = 0;  // M
    int cols = 0;  // N
    std::vector<std::complex<double>> entries;  // row-major

    std::complex<double>& at(int r, int c) { return entries[r * cols + c]; }
    const std::complex<double>& at(int r, int c) const { return entries[r * cols + c]; }
};

struct McEstimate {
    double mean = 0;
    double std_error = 0;  // sample standard deviation / sqrt(n)
    std::uint64_t n = 0;
    double gamma = 0;
};

/// Density histogram of one eigenvalue over [0, max observed], with raw
/// counts and per-bin density = count / (n * bin width).
struct Histogram {
    std::vector<double> edges;  // bins + 1, ascending
    std::vector<std::uint64_t> counts;
    std::vector<double> density;
    std::uint64_t n = 0;
};

ChannelSample sample_channel(const Dimensions& dims, std::uint64_t seed, std::uint64_t index);

/// Eigenvalues of the Y x Y Hermitian Gram matrix of the sample (HH' or H'H,
/// whichever is smaller), by cyclic Jacobi rotations until the off-diagonal
/// Frobenius norm falls below 1e-12 * trace; sorted descending. Throws
/// ConvergenceFailure after 30 sweeps (unreachable for the sizes here).
std::vector<double> ordered_eigenvalues(const ChannelSample& h);

/// Sample mean of exp(-gamma sum alpha_j mu_j) over n independent channel
/// draws. Bit-identical for a fixed (seed, n) regardless of `threads`
/// (0 = hardware default): samples are accumulated per fixed-size block and
/// blocks are combined in index order.
McEstimate estimate_pep(const Dimensions& dims, const std::vector<double>& alpha, double gamma,
                        std::uint64_t n, std::uint64_t seed, int threads = 0);

/// Histogram of the `index`-th ordered eigenvalue (1-based) over n draws.
Histogram marginal_histogram(const Dimensions& dims, int index, int bins, std::uint64_t n,
                             std::uint64_t seed, int threads = 0);

/// Sampled expectation curve over a dB grid; each point uses the same
/// rounded-rational gamma as the exact engine so the two are comparable.
PepCurve mc_pep_curve(const Dimensions& dims, const std::vector<Rational>& alpha,
                      const std::vector<double>& grid_db, std::uint64_t n, std::uint64_t seed,
                      int threads = 0, int window = 3);

}  // namespace wishart

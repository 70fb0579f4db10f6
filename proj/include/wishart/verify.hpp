#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wishart::verify {

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    /// One-line pass/fail summary; failing suites list the first few
    /// offending checks on indented follow-up lines.
    std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20260823;

/// Exhaustive sweep over N, M in 1..4 and every nonzero 0/1 weight vector:
/// the bound polynomial r must be a pure polynomial whose smallest total
/// degree matches both the degree ledger and (N-p1+1)(M-p1+1) - K.
SuiteResult degree_sweep();

/// Term-by-term homogeneity of the density polynomial, of g, and of psi/g
/// at their ledger degrees, the factorization psi == g * (psi/g), and the
/// ledger's internal arithmetic, over the same exhaustive sweep.
SuiteResult homogeneity();

/// Randomized monomial inputs theta^beta: the ordered-domain omega integral
/// must collapse to a single positive Laurent term with inverse exponent
/// K + sum(beta), every intermediate stage must satisfy the stepwise
/// exponent-balance invariant, and evaluation at a fixed omega must equal
/// an independent numeric-rate integration of the same integrand.
SuiteResult omega_integral(std::uint64_t seed = kDefaultSeed);

/// The ordered-domain integral of the unnormalized density must equal
/// prod_{i=1..Y} (X-i)!(Y-i)! for all N, M in 1..4, a few values are pinned
/// outright, and the normalized density must integrate to exactly 1.
SuiteResult normalization();

/// 3x3 exact expectation curves over 0..40 dB: the fitted high-SNR slope
/// (last three grid points, 30-40 dB) must match the predicted decay
/// exponent within 2% for single-index and mixed weight vectors.
SuiteResult slopes_3x3();

/// 4x4 exact expectation curves, exponents 16 / 9 / 4 as the leading
/// weighted index moves from 1 to 3, including a weight vector whose nonzero
/// entries differ by a factor of 100 (which pushes the asymptotic regime
/// out, hence the wider 0..60 dB grid).
SuiteResult slopes_4x4();

/// Exact chain at gamma in {1, 10, 100} for the 3x3 weight vectors:
/// E[e^{-gamma sum alpha mu}] <= same with all nonzero weights lowered to
/// alpha_min <= Laurent bound at omega = 1 + gamma*alpha_min. All three
/// quantities are exact rationals, so the comparisons are exact.
SuiteResult bound_chain();

/// Over the exhaustive 0/1 sweep, the leading inverse omega exponent of the
/// integrated bound must equal (N-p1+1)(M-p1+1) with a positive coefficient.
SuiteResult leading_exponent();

/// Random positive points: the exact marginal density of a single ordered
/// eigenvalue never exceeds the bound r(mu) e^{-mu} / Z beyond float slack,
/// for the 2x2, 3x2 and 3x3 configurations.
SuiteResult dominance(std::uint64_t seed = kDefaultSeed);

/// Monte-Carlo cross-check on 3x3: sampled curves at n = 10^6 stay within
/// four standard errors of the exact values over 0..12 dB, and the sampler
/// is bit-identical across thread counts.
SuiteResult mc_cross(std::uint64_t seed = kDefaultSeed, int threads = 0);

/// Suites behind one CLI token; unknown tokens throw std::invalid_argument.
/// Tokens: theorem1, theorem2, normalization, dominance, mc-cross, all.
std::vector<SuiteResult> run_suites(const std::string& token,
                                    std::uint64_t seed = kDefaultSeed, int threads = 0);

}  // namespace wishart::verify

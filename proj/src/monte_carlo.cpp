#include "wishart/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "wishart/errors.hpp"
#include "wishart/philox.hpp"

namespace wishart {

namespace {

constexpr std::uint64_t kBlockSamples = 4096;  // fixed: reduction tree depends on n only

int resolve_threads(int threads, std::uint64_t work_items) {
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), work_items));
    return std::max(threads, 1);
}

// deterministic block-parallel driver: worker(b) for b in [0, blocks)
template <class Fn>
void run_blocks(std::uint64_t blocks, int threads, Fn&& worker) {
    threads = resolve_threads(threads, blocks);
    if (threads <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) worker(b);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
                if (b >= blocks) return;
                worker(b);
            }
        });
    for (auto& th : pool) th.join();
}

std::pair<double, double> gaussian_pair(std::uint32_t w0, std::uint32_t w1) {
    constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32
    const double u0 = (w0 + 0.5) * kScale;          // in (0, 1), never 0
    const double u1 = (w1 + 0.5) * kScale;
    const double radius = std::sqrt(-2.0 * std::log(u0));
    const double angle = 6.283185307179586476925286766559 * u1;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

ChannelSample sample_channel(const Dimensions& dims, std::uint64_t seed, std::uint64_t index) {
    ChannelSample h;
    h.rows = dims.m;
    h.cols = dims.n;
    h.entries.resize(static_cast<std::size_t>(h.rows) * h.cols);
    constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
    for (std::size_t e = 0; e < h.entries.size(); ++e) {
        // two complex entries per generator block: words (0,1) and (2,3)
        const auto words = Philox4x32::sample_block(seed, index, static_cast<std::uint32_t>(e / 2));
        const std::size_t slot = 2 * (e % 2);
        const auto [z0, z1] = gaussian_pair(words[slot], words[slot + 1]);
        h.entries[e] = std::complex<double>(z0 * kInvSqrt2, z1 * kInvSqrt2);
    }
    return h;
}

std::vector<double> ordered_eigenvalues(const ChannelSample& h) {
    const int rows = h.rows, cols = h.cols;
    const int y = std::min(rows, cols);
    // Gram matrix of the smaller shape: HH' when M <= N, else H'H
    std::vector<std::complex<double>> a(static_cast<std::size_t>(y) * y);
    for (int r = 0; r < y; ++r)
        for (int c = 0; c < y; ++c) {
            std::complex<double> acc{0.0, 0.0};
            if (rows <= cols)
                for (int k = 0; k < cols; ++k) acc += h.at(r, k) * std::conj(h.at(c, k));
            else
                for (int k = 0; k < rows; ++k) acc += std::conj(h.at(k, r)) * h.at(k, c);
            a[r * y + c] = acc;
        }

    const auto off_norm = [&] {
        double sum = 0;
        for (int p = 0; p < y; ++p)
            for (int q = 0; q < y; ++q)
                if (p != q) sum += std::norm(a[p * y + q]);
        return std::sqrt(sum);
    };
    double trace = 0;
    for (int p = 0; p < y; ++p) trace += a[p * y + p].real();
    const double tol = 1e-12 * trace;

    constexpr int kMaxSweeps = 30;
    int sweep = 0;
    for (; sweep < kMaxSweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < y - 1; ++p)
            for (int q = p + 1; q < y; ++q) {
                const std::complex<double> g = a[p * y + q];
                const double absg = std::abs(g);
                if (absg == 0.0) continue;
                const std::complex<double> u = g / absg;
                const double alpha = a[p * y + p].real();
                const double beta = a[q * y + q].real();
                const double tau = (beta - alpha) / (2.0 * absg);
                const double sgn = tau < 0 ? -1.0 : 1.0;
                const double t = sgn / (std::fabs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // columns: A <- A J, then rows: A <- J* A
                for (int k = 0; k < y; ++k) {
                    const std::complex<double> akp = a[k * y + p], akq = a[k * y + q];
                    a[k * y + p] = c * akp - s * std::conj(u) * akq;
                    a[k * y + q] = s * akp + c * std::conj(u) * akq;
                }
                for (int k = 0; k < y; ++k) {
                    const std::complex<double> apk = a[p * y + k], aqk = a[q * y + k];
                    a[p * y + k] = c * apk - s * u * aqk;
                    a[q * y + k] = s * apk + c * u * aqk;
                }
            }
    }
    if (off_norm() > tol)
        throw ConvergenceFailure("eigenvalue iteration did not settle in 30 sweeps");

    std::vector<double> mu(y);
    for (int p = 0; p < y; ++p) mu[p] = a[p * y + p].real();
    std::sort(mu.begin(), mu.end(), std::greater<double>());
    return mu;
}

McEstimate estimate_pep(const Dimensions& dims, const std::vector<double>& alpha, double gamma,
                        std::uint64_t n, std::uint64_t seed, int threads) {
    if (static_cast<int>(alpha.size()) != dims.y())
        throw std::invalid_argument("weight vector length must equal min(N, M)");
    if (n < 1) throw std::invalid_argument("estimate_pep: need at least one sample");
    if (gamma < 0) throw std::invalid_argument("estimate_pep: gamma must be nonnegative");

    const std::uint64_t blocks = (n + kBlockSamples - 1) / kBlockSamples;
    std::vector<double> bsum(blocks), bsumsq(blocks);
    run_blocks(blocks, threads, [&](std::uint64_t b) {
        const std::uint64_t lo = b * kBlockSamples;
        const std::uint64_t hi = std::min(n, lo + kBlockSamples);
        double sum = 0, sumsq = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const auto mu = ordered_eigenvalues(sample_channel(dims, seed, i));
            double dot = 0;
            for (std::size_t j = 0; j < alpha.size(); ++j) dot += alpha[j] * mu[j];
            const double v = std::exp(-gamma * dot);
            sum += v;
            sumsq += v * v;
        }
        bsum[b] = sum;
        bsumsq[b] = sumsq;
    });

    double total = 0, totalsq = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {  // fixed combination order
        total += bsum[b];
        totalsq += bsumsq[b];
    }
    McEstimate est;
    est.n = n;
    est.gamma = gamma;
    est.mean = total / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (totalsq - n * est.mean * est.mean) / static_cast<double>(n - 1));
        est.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return est;
}

Histogram marginal_histogram(const Dimensions& dims, int index, int bins, std::uint64_t n,
                             std::uint64_t seed, int threads) {
    if (index < 1 || index > dims.y())
        throw std::invalid_argument("marginal_histogram: eigenvalue index out of range");
    if (bins < 1 || n < 1) throw std::invalid_argument("marginal_histogram: empty request");

    std::vector<double> values(n);
    const std::uint64_t blocks = (n + kBlockSamples - 1) / kBlockSamples;
    run_blocks(blocks, threads, [&](std::uint64_t b) {
        const std::uint64_t lo = b * kBlockSamples;
        const std::uint64_t hi = std::min(n, lo + kBlockSamples);
        for (std::uint64_t i = lo; i < hi; ++i)
            values[i] = ordered_eigenvalues(sample_channel(dims, seed, i))[index - 1];
    });

    const double top = *std::max_element(values.begin(), values.end());
    const double hi_edge = top > 0 ? top * (1.0 + 1e-12) : 1.0;
    Histogram hist;
    hist.n = n;
    hist.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) hist.edges[b] = hi_edge * b / bins;
    hist.counts.assign(bins, 0);
    for (double v : values) {
        int b = static_cast<int>(v / hi_edge * bins);
        b = std::clamp(b, 0, bins - 1);
        ++hist.counts[b];
    }
    hist.density.resize(bins);
    const double width = hi_edge / bins;
    for (int b = 0; b < bins; ++b)
        hist.density[b] = static_cast<double>(hist.counts[b]) / (static_cast<double>(n) * width);
    return hist;
}

PepCurve mc_pep_curve(const Dimensions& dims, const std::vector<Rational>& alpha,
                      const std::vector<double>& grid_db, std::uint64_t n, std::uint64_t seed,
                      int threads, int window) {
    if (static_cast<int>(alpha.size()) != dims.y())
        throw std::invalid_argument("weight vector length must equal min(N, M)");
    if (grid_db.empty()) throw std::invalid_argument("empty dB grid");
    if (!std::is_sorted(grid_db.begin(), grid_db.end()))
        throw std::invalid_argument("dB grid must be ascending");

    std::vector<double> alpha_f(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha_f[i] = alpha[i].to_double();

    PepCurve curve{dims,   alpha, CurveSource::MonteCarlo, {}, 0.0,
                   diversity_exponent(dims, alpha), window};
    for (double db : grid_db) {
        PepPoint pt;
        pt.gamma_db = db;
        pt.gamma = db_to_gamma(db);
        const McEstimate est = estimate_pep(dims, alpha_f, pt.gamma.to_double(), n, seed, threads);
        pt.value_f = est.mean;
        pt.stderr_f = est.std_error;
        curve.points.push_back(std::move(pt));
    }
    try {
        curve.fitted_slope = slope_fit(curve, window);
    } catch (const InsufficientPoints&) {
        curve.fitted_slope = std::numeric_limits<double>::quiet_NaN();
    }
    return curve;
}

}  // namespace wishart

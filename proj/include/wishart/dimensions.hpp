#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "wishart/errors.hpp"
#include "wishart/rational.hpp"

namespace wishart {

/// Antenna configuration. X (max) and Y (min) are derived on demand and can
/// never disagree with N, M.
struct Dimensions {
    int n;  // transmit antennas
    int m;  // receive antennas

    Dimensions(int n_, int m_) : n(n_), m(m_) {
        if (n < 1 || m < 1)
            throw std::invalid_argument("Dimensions: N and M must be positive");
    }

    int x() const { return std::max(n, m); }
    int y() const { return std::min(n, m); }
};

enum class AlphaCase {
    AlphaOneZero,      // alpha_1 == 0, so index 1 belongs to s
    AlphaOnePositive,  // alpha_1 > 0, so p_1 == 1
};

/// Partition of the eigenvalue indices {1..Y} by the weight vector alpha:
/// p holds the indices with nonzero weight, s the rest (both ascending).
struct IndexSplit {
    std::vector<Rational> alpha;
    std::vector<int> p;
    std::vector<int> s;
    int k = 0;  // |p|
    AlphaCase alpha_case = AlphaCase::AlphaOnePositive;
    int epsilon = 0;  // number of s-indices below p_1; meaningful when alpha_1 == 0
    Rational alpha_min;  // smallest nonzero weight

    int p1() const { return p.front(); }
};

/// Classifies a nonnegative weight vector. Throws AllZeroAlpha when every
/// entry is zero and std::invalid_argument on a negative entry.
IndexSplit split_indices(std::vector<Rational> alpha);

/// Exact-decimal parse of a comma-separated weight list such as "0.1,0,1".
std::vector<Rational> parse_alpha(std::string_view text);

}  // namespace wishart

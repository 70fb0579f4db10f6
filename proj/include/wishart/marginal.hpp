#pragma once

#include <vector>

#include "wishart/dimensions.hpp"
#include "wishart/exp_poly.hpp"

namespace wishart {

/// Closed-form degree bookkeeping for the bound r = g*h: the uniform degree
/// of g, the uniform degree of psi/g, the degree carried by the variables
/// that integrate out to constants, the degree gained from the finite nested
/// integrals, and the resulting smallest total degree of r.
struct DegreeLedger {
    int d_g_smallest = 0;
    int d_h_org = 0;
    int d_h_vanishing = 0;
    int d_h_added = 0;
    int d_r_smallest = 0;
};

DegreeLedger degree_ledger(const Dimensions& dims, const IndexSplit& split);

/// The substitute density: psi times the retained exponentials only —
/// exp(-(mu_1 + sum_p mu)) when alpha_1 == 0, exp(-sum_p mu) when
/// alpha_1 > 0. Dominates the unnormalized joint density everywhere on the
/// positive orthant because dropped exponentials are <= 1 there.
ExpPoly build_rho_hat(const Dimensions& dims, const IndexSplit& split);

/// psi/g: the s-variables' power prefactors together with every squared
/// difference whose index pair is not entirely inside p. Assembled from the
/// factor list, so no polynomial division is involved.
ExpPoly build_psi_quotient(const Dimensions& dims, const IndexSplit& split);

struct MarginalBound {
    Dimensions dims;
    IndexSplit split;
    ExpPoly g;  // factors of psi that involve p-variables only
    ExpPoly h;  // psi/g (with e^{-mu_1} when alpha_1 == 0) integrated over s
    ExpPoly r;  // g * h: a pure polynomial in exactly the p-variables
    int smallest_deg = 0;
    DegreeLedger ledger;
};

/// Upper bound on the marginal density of the p-variables in the
/// unnormalized convention: f_hat(mu_p) = r(mu_p) * exp(-sum_p mu). Divide
/// r by the normalization constant to compare against exact_marginal.
MarginalBound marginal_bound(const Dimensions& dims, const IndexSplit& split);

/// The true marginal density of the selected (ascending) eigenvalue indices,
/// by exact iterated integration of the normalized joint density over the
/// remaining variables with the genuine ordered-domain limits: the
/// largest-index remaining variable goes first, bounded by its nearest live
/// neighbors (or 0 / infinity at the ends).
ExpPoly exact_marginal(const Dimensions& dims, const std::vector<int>& p);

}  // namespace wishart

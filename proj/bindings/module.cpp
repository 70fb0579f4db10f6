#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "wishart/joint_pdf.hpp"
#include "wishart/marginal.hpp"
#include "wishart/monte_carlo.hpp"
#include "wishart/pep.hpp"

namespace py = pybind11;
using namespace wishart;

namespace {

std::vector<Rational> alpha_from(const std::string& text) { return parse_alpha(text); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "exact and sampled expectation bounds for ordered eigenvalues of complex "
        "Wishart channel matrices";

    mod.def(
        "psi",
        [](int n, int m) { return build_psi(Dimensions(n, m)).to_string(); },
        py::arg("n"), py::arg("m"),
        "eigenvalue-density polynomial (one term per line)");

    mod.def(
        "normalization_constant",
        [](int n, int m) { return normalization_constant(Dimensions(n, m)).str(); },
        py::arg("n"), py::arg("m"));

    mod.def(
        "exact_pep",
        [](int n, int m, const std::string& alpha, const std::string& gamma) {
            const Rational v =
                exact_pep(Dimensions(n, m), alpha_from(alpha), Rational::parse(gamma));
            return py::make_tuple(v.str(), v.to_double());
        },
        py::arg("n"), py::arg("m"), py::arg("alpha"), py::arg("gamma"),
        "closed-form E[exp(-gamma sum alpha_j mu_j)] as (exact string, float)");

    mod.def(
        "bound",
        [](int n, int m, const std::string& alpha) {
            const Dimensions dims(n, m);
            const IndexSplit split = split_indices(alpha_from(alpha));
            const MarginalBound mb = marginal_bound(dims, split);
            py::dict ledger;
            ledger["d_g"] = mb.ledger.d_g_smallest;
            ledger["d_h_org"] = mb.ledger.d_h_org;
            ledger["d_h_vanishing"] = mb.ledger.d_h_vanishing;
            ledger["d_h_added"] = mb.ledger.d_h_added;
            ledger["d_r"] = mb.ledger.d_r_smallest;
            py::dict out;
            out["r"] = mb.r.to_string();
            out["selected"] = split.p;
            out["smallest_degree"] = mb.smallest_deg;
            out["ledger"] = ledger;
            out["decay_exponent"] = diversity_exponent(dims, split.alpha);
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("alpha"),
        "marginal-density bound polynomial r with its degree bookkeeping");

    mod.def(
        "exact_marginal",
        [](int n, int m, const std::vector<int>& indices) {
            return exact_marginal(Dimensions(n, m), indices).to_string();
        },
        py::arg("n"), py::arg("m"), py::arg("indices"),
        "exact marginal density of the selected ordered eigenvalues");

    mod.def(
        "ordered_exp_integral",
        [](const std::vector<int>& beta) {
            const OrderedIntegralResult res = ordered_exp_integral(beta);
            py::dict laurent;
            for (const auto& [e, c] : res.laurent) laurent[py::int_(e)] = c.str();
            py::dict out;
            out["laurent"] = laurent;
            out["leading_exponent"] = res.leading_exponent;
            out["leading_coeff"] = res.leading_coeff.str();
            return out;
        },
        py::arg("beta"),
        "ordered-domain integral of theta^beta exp(-omega sum theta) as a Laurent "
        "polynomial in omega");

    mod.def(
        "estimate_pep",
        [](int n, int m, const std::vector<double>& alpha, double gamma, std::uint64_t samples,
           std::uint64_t seed, int threads) {
            const McEstimate est =
                estimate_pep(Dimensions(n, m), alpha, gamma, samples, seed, threads);
            return py::make_tuple(est.mean, est.std_error);
        },
        py::arg("n"), py::arg("m"), py::arg("alpha"), py::arg("gamma"), py::arg("samples"),
        py::arg("seed"), py::arg("threads") = 0,
        "sampled E[exp(-gamma sum alpha_j mu_j)] as (mean, standard error); "
        "bit-identical for fixed (seed, samples) regardless of threads");

    mod.def(
        "db_to_gamma",
        [](double db) { return db_to_gamma(db).str(); },
        py::arg("db"), "SNR in dB as the exact rounded rational used by the curves");

    mod.def(
        "diversity_exponent",
        [](int n, int m, const std::string& alpha) {
            return diversity_exponent(Dimensions(n, m), alpha_from(alpha));
        },
        py::arg("n"), py::arg("m"), py::arg("alpha"),
        "predicted decay exponent (N - p1 + 1)(M - p1 + 1)");
}

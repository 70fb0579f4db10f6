#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wishart/curve_io.hpp"
#include "wishart/joint_pdf.hpp"
#include "wishart/marginal.hpp"
#include "wishart/monte_carlo.hpp"
#include "wishart/pep.hpp"
#include "wishart/run_config.hpp"
#include "wishart/verify.hpp"

namespace {

using namespace wishart;

int to_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || v.empty())
        throw std::invalid_argument(key + ": expected an integer, got '" + v + "'");
    return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || v.empty())
        throw std::invalid_argument(key + ": expected a nonnegative integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::invalid_argument(key + ": expected a boolean, got '" + v + "'");
}

/// Flag value if given on the command line, else the config-file value,
/// else the built-in fallback. Implements "flags override file values".
struct Effective {
    RunConfig cfg;

    std::string str(const CLI::Option* opt, const std::string& cli_value,
                    const std::string& key, const std::string& fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg.has(key)) return cfg.get(key);
        return fallback;
    }

    std::string required(const CLI::Option* opt, const std::string& cli_value,
                         const std::string& key) const {
        const std::string v = str(opt, cli_value, key, "");
        if (v.empty())
            throw std::invalid_argument("missing --" + key + " (flag or config key '" + key +
                                        "')");
        return v;
    }

    bool flag(const CLI::Option* opt, bool cli_value, const std::string& key) const {
        if (opt->count() > 0) return cli_value;
        if (cfg.has(key)) return to_bool(key, cfg.get(key));
        return false;
    }
};

Effective load_config(const std::string& path) {
    Effective eff;
    if (path.empty()) return eff;
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    eff.cfg = RunConfig::from_file_text(text);
    return eff;
}

void emit(const std::string& path, const std::string& content, const char* what) {
    if (path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(path, content);
        std::cout << "wrote " << what << " to " << path << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact and sampled expectation bounds for ordered eigenvalues of complex "
        "Wishart channel matrices"};
    app.require_subcommand(1);

    // ---- bound ----------------------------------------------------------
    std::string b_n, b_m, b_alpha, b_config;
    bool b_dump = false;
    CLI::App* bound = app.add_subcommand(
        "bound", "compute the marginal-density bound polynomial and its degree bookkeeping");
    auto* b_n_o = bound->add_option("--n", b_n, "transmit antennas");
    auto* b_m_o = bound->add_option("--m", b_m, "receive antennas");
    auto* b_alpha_o =
        bound->add_option("--alpha", b_alpha, "comma-separated nonnegative weights, length min(N,M)");
    auto* b_dump_o = bound->add_flag("--dump-poly", b_dump, "print the bound polynomial r");
    bound->add_option("--config", b_config, "key=value settings file; flags override");

    // ---- pep ------------------------------------------------------------
    std::string p_n, p_m, p_alpha, p_grid, p_source, p_samples, p_seed, p_threads, p_window,
        p_out, p_svg, p_config;
    bool p_exact_col = false;
    CLI::App* pep = app.add_subcommand(
        "pep", "expectation curve over an SNR grid as CSV (and optionally SVG)");
    auto* p_n_o = pep->add_option("--n", p_n, "transmit antennas");
    auto* p_m_o = pep->add_option("--m", p_m, "receive antennas");
    auto* p_alpha_o = pep->add_option("--alpha", p_alpha, "comma-separated weights");
    auto* p_grid_o = pep->add_option("--grid", p_grid, "start:stop:step in dB (default 0:40:5)");
    auto* p_source_o = pep->add_option("--source", p_source, "exact | bound | mc");
    auto* p_samples_o = pep->add_option("--samples", p_samples, "sample count for mc");
    auto* p_seed_o = pep->add_option("--seed", p_seed, "sampler seed");
    auto* p_threads_o = pep->add_option("--threads", p_threads, "worker threads for mc (0 = auto)");
    auto* p_window_o =
        pep->add_option("--window", p_window, "trailing grid points used for the slope fit");
    auto* p_out_o = pep->add_option("--out", p_out, "CSV output path (default stdout)");
    auto* p_svg_o = pep->add_option("--svg", p_svg, "also render this curve as SVG");
    auto* p_exact_o = pep->add_flag("--exact-column", p_exact_col,
                                    "append the exact rational value as a final CSV column");
    pep->add_option("--config", p_config, "key=value settings file; flags override");

    // ---- verify ---------------------------------------------------------
    std::string v_suite, v_seed, v_threads, v_config;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option(
        "suite", v_suite, "theorem1 | theorem2 | normalization | dominance | mc-cross | all");
    auto* v_seed_o = verify_cmd->add_option("--seed", v_seed, "seed for randomized suites");
    auto* v_threads_o =
        verify_cmd->add_option("--threads", v_threads, "worker threads for sampling (0 = auto)");
    verify_cmd->add_option("--config", v_config, "key=value settings file; flags override");

    // ---- plot -----------------------------------------------------------
    std::vector<std::string> l_inputs;
    std::string l_out, l_config;
    CLI::App* plot = app.add_subcommand(
        "plot", "combine curve CSV files into one log-scale SVG with decay reference lines");
    plot->add_option("inputs", l_inputs, "curve CSV files");
    auto* l_out_o = plot->add_option("--out", l_out, "SVG output path (default stdout)");
    plot->add_option("--config", l_config, "key=value settings file; flags override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bound->parsed()) {
            const Effective eff = load_config(b_config);
            const Dimensions dims(to_int("n", eff.required(b_n_o, b_n, "n")),
                                  to_int("m", eff.required(b_m_o, b_m, "m")));
            const auto alpha = parse_alpha(eff.required(b_alpha_o, b_alpha, "alpha"));
            const IndexSplit split = split_indices(alpha);
            const MarginalBound mb = marginal_bound(dims, split);
            const int predicted =
                (dims.n - split.p1() + 1) * (dims.m - split.p1() + 1) - split.k;

            std::cout << "n=" << dims.n << " m=" << dims.m << " alpha=" << format_alpha(alpha)
                      << '\n';
            std::cout << "selected indices:";
            for (int idx : split.p) std::cout << ' ' << idx;
            std::cout << '\n';
            std::cout << "terms in r: " << mb.r.term_count() << '\n';
            std::cout << "smallest degree: " << mb.smallest_deg << '\n';
            std::cout << "predicted smallest degree: " << predicted << '\n';
            const DegreeLedger& led = mb.ledger;
            std::cout << "ledger: d_g=" << led.d_g_smallest << " d_h_org=" << led.d_h_org
                      << " d_h_vanishing=" << led.d_h_vanishing
                      << " d_h_added=" << led.d_h_added << " d_r=" << led.d_r_smallest << '\n';
            std::cout << "decay exponent: " << diversity_exponent(dims, alpha) << '\n';
            if (eff.flag(b_dump_o, b_dump, "dump_poly"))
                std::cout << "r =\n" << mb.r.to_string() << '\n';
            if (mb.smallest_deg != predicted || mb.smallest_deg != led.d_r_smallest) {
                std::cerr << "error: computed smallest degree disagrees with the closed form"
                          << '\n';
                return 1;
            }
            return 0;
        }

        if (pep->parsed()) {
            const Effective eff = load_config(p_config);
            const Dimensions dims(to_int("n", eff.required(p_n_o, p_n, "n")),
                                  to_int("m", eff.required(p_m_o, p_m, "m")));
            const auto alpha = parse_alpha(eff.required(p_alpha_o, p_alpha, "alpha"));
            const auto grid = parse_grid(eff.str(p_grid_o, p_grid, "grid", "0:40:5"));
            const CurveSource source =
                parse_source(eff.str(p_source_o, p_source, "source", "exact"));
            const int window = to_int("window", eff.str(p_window_o, p_window, "window", "3"));
            const std::string out = eff.str(p_out_o, p_out, "out", "");
            const std::string svg = eff.str(p_svg_o, p_svg, "svg", "");
            const bool exact_col = eff.flag(p_exact_o, p_exact_col, "exact_column");

            const PepCurve curve = [&] {
                if (source == CurveSource::MonteCarlo) {
                    const auto samples =
                        to_u64("samples", eff.str(p_samples_o, p_samples, "samples", "1000000"));
                    const auto seed =
                        to_u64("seed", eff.str(p_seed_o, p_seed, "seed", "20260823"));
                    const int threads =
                        to_int("threads", eff.str(p_threads_o, p_threads, "threads", "0"));
                    return mc_pep_curve(dims, alpha, grid, samples, seed, threads, window);
                }
                return pep_curve(dims, alpha, grid, source, window);
            }();

            const std::string csv = curve_to_csv(curve, exact_col);
            emit(out, csv, "curve");
            if (!out.empty()) {
                char line[96];
                std::snprintf(line, sizeof line, "fitted slope %.4f over the last %d points; "
                                                 "predicted exponent %d\n",
                              curve.fitted_slope, curve.window, curve.predicted_exponent);
                std::cout << line;
            }
            if (!svg.empty()) {
                write_file_atomic(svg, render_svg({parse_csv(csv)}));
                std::cout << "wrote plot to " << svg << '\n';
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            const Effective eff = load_config(v_config);
            const std::string suite = [&] {
                if (!v_suite.empty()) return v_suite;
                if (eff.cfg.has("suite")) return eff.cfg.get("suite");
                throw std::invalid_argument("missing suite (argument or config key 'suite')");
            }();
            const auto seed = to_u64(
                "seed", eff.str(v_seed_o, v_seed, "seed",
                                std::to_string(wishart::verify::kDefaultSeed)));
            const int threads =
                to_int("threads", eff.str(v_threads_o, v_threads, "threads", "0"));
            bool all_ok = true;
            for (const auto& result : wishart::verify::run_suites(suite, seed, threads)) {
                std::cout << result.summary() << '\n';
                all_ok = all_ok && result.ok();
            }
            std::cout << (all_ok ? "verified" : "failed") << '\n';
            return all_ok ? 0 : 1;
        }

        if (plot->parsed()) {
            const Effective eff = load_config(l_config);
            if (l_inputs.empty() && eff.cfg.has("inputs")) {
                std::istringstream is(eff.cfg.get("inputs"));
                for (std::string tok; is >> tok;) l_inputs.push_back(tok);
            }
            if (l_inputs.empty())
                throw std::invalid_argument("plot needs at least one CSV input");
            std::vector<CurveData> curves;
            for (const std::string& path : l_inputs) {
                std::string text;
                try {
                    text = read_file(path);
                } catch (const std::runtime_error& e) {
                    throw std::invalid_argument(e.what());
                }
                curves.push_back(parse_csv(text));
            }
            emit(eff.str(l_out_o, l_out, "out", ""), render_svg(curves), "plot");
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

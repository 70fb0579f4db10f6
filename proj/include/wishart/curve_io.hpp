#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wishart/pep.hpp"

namespace wishart {

/// One curve as read back from CSV: float columns plus the labels needed for
/// plotting and the summary line when present.
struct CurveData {
    std::vector<double> gamma_db;
    std::vector<double> value;
    std::vector<double> std_error;  // 0 where the column was empty
    std::string source;             // "exact" | "bound" | "mc"
    int n = 0;
    int m = 0;
    std::string alpha_label;        // ';'-joined exact weights
    int predicted_exponent = 0;
    double fitted_slope = 0;
    bool has_slope = false;
};

/// ';'-joined canonical rationals, e.g. "1/10;0;1".
std::string format_alpha(const std::vector<Rational>& alpha);

/// CSV with header gamma_db,value,stderr,source,n,m,alpha,predicted_exponent
/// (plus value_exact when requested), one row per grid point, and a trailing
/// `# fitted_slope=... predicted_exponent=... window=...` summary line.
/// stderr stays empty except for sampled curves; value_exact stays empty for
/// sampled curves.
std::string curve_to_csv(const PepCurve& curve, bool exact_column = false);

/// Parses curve_to_csv output (the value_exact column is optional). Throws
/// std::invalid_argument on malformed input or when no data rows remain.
CurveData parse_csv(std::string_view text);

/// Deterministic standalone SVG: log-scale value against dB, one polyline
/// per curve, plus one dotted reference line per distinct predicted exponent
/// anchored at the last point of the first curve carrying it.
std::string render_svg(const std::vector<CurveData>& curves);

/// Writes via a temporary file in the same directory plus an atomic rename,
/// so an interrupted run never leaves a partial file at `path`.
void write_file_atomic(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);  // throws std::runtime_error

}  // namespace wishart

#include "wishart/curve_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wishart {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

constexpr std::string_view kHeader = "gamma_db,value,stderr,source,n,m,alpha,predicted_exponent";

}  // namespace

std::string format_alpha(const std::vector<Rational>& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ';';
        out += alpha[i].str();
    }
    return out;
}

std::string curve_to_csv(const PepCurve& curve, bool exact_column) {
    std::ostringstream os;
    os << kHeader;
    if (exact_column) os << ",value_exact";
    os << '\n';
    const std::string alpha = format_alpha(curve.alpha);
    const bool sampled = curve.source == CurveSource::MonteCarlo;
    for (const PepPoint& pt : curve.points) {
        os << fmt(pt.gamma_db) << ',' << fmt(pt.value_f) << ',';
        if (sampled) os << fmt(pt.stderr_f);
        os << ',' << source_name(curve.source) << ',' << curve.dims.n << ',' << curve.dims.m
           << ',' << alpha << ',' << curve.predicted_exponent;
        if (exact_column) {
            os << ',';
            if (!sampled) os << pt.value.str();
        }
        os << '\n';
    }
    char slope[64];
    std::snprintf(slope, sizeof slope, "%.6f", curve.fitted_slope);
    os << "# fitted_slope=" << slope << " predicted_exponent=" << curve.predicted_exponent
       << " window=" << curve.window << '\n';
    return os.str();
}

CurveData parse_csv(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    CurveData out;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("fitted_slope=");
            if (pos != std::string::npos) {
                out.fitted_slope = std::strtod(line.c_str() + pos + 13, nullptr);
                out.has_slope = true;
            }
            continue;
        }
        if (!saw_header) {
            if (line != kHeader && line != std::string(kHeader) + ",value_exact")
                throw std::invalid_argument("csv: unrecognized header '" + line + "'");
            saw_header = true;
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 8 && cols.size() != 9)
            throw std::invalid_argument("csv: expected 8 or 9 columns, got row '" + line + "'");
        try {
            out.gamma_db.push_back(std::stod(cols[0]));
            out.value.push_back(std::stod(cols[1]));
            out.std_error.push_back(cols[2].empty() ? 0.0 : std::stod(cols[2]));
            const int n = std::stoi(cols[4]);
            const int m = std::stoi(cols[5]);
            const int pe = std::stoi(cols[7]);
            if (out.gamma_db.size() == 1) {
                out.source = cols[3];
                out.n = n;
                out.m = m;
                out.alpha_label = cols[6];
                out.predicted_exponent = pe;
            } else if (out.source != cols[3] || out.n != n || out.m != m ||
                       out.alpha_label != cols[6] || out.predicted_exponent != pe) {
                throw std::invalid_argument("csv: rows belong to different curves");
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("csv: malformed row '" + line + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("csv: value out of range in row '" + line + "'");
        }
    }
    if (out.gamma_db.empty()) throw std::invalid_argument("csv: no data rows");
    return out;
}

std::string render_svg(const std::vector<CurveData>& curves) {
    if (curves.empty()) throw std::invalid_argument("svg: no curves");
    constexpr double kW = 760, kH = 560, kL = 70, kR = 740, kT = 20, kB = 500;
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr int kPaletteSize = 8;

    double xmin = 0, xmax = 0, vlo = 0, vhi = 0;
    bool first = true;
    for (const CurveData& c : curves)
        for (std::size_t i = 0; i < c.gamma_db.size(); ++i) {
            if (!(c.value[i] > 0)) continue;
            const double v = std::log10(c.value[i]);
            if (first) {
                xmin = xmax = c.gamma_db[i];
                vlo = vhi = v;
                first = false;
            } else {
                xmin = std::min(xmin, c.gamma_db[i]);
                xmax = std::max(xmax, c.gamma_db[i]);
                vlo = std::min(vlo, v);
                vhi = std::max(vhi, v);
            }
        }
    if (first) throw std::invalid_argument("svg: no positive values to plot");
    if (xmax == xmin) {
        xmin -= 1;
        xmax += 1;
    }
    double ylo = std::floor(vlo), yhi = std::ceil(vhi);
    if (ylo == yhi) yhi = ylo + 1;

    const auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kR - kL); };
    const auto py = [&](double v) { return kB - (v - ylo) / (yhi - ylo) * (kB - kT); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kW << "\" height=\"" << kH
       << "\" fill=\"#ffffff\"/>\n";

    // frame
    os << "<rect x=\"" << fmt2(kL) << "\" y=\"" << fmt2(kT) << "\" width=\"" << fmt2(kR - kL)
       << "\" height=\"" << fmt2(kB - kT)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    // x ticks every 5 dB (10 for wide ranges)
    const double xstep = (xmax - xmin) > 60 ? 10 : 5;
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
        os << "<line x1=\"" << fmt2(px(x)) << "\" y1=\"" << fmt2(kB) << "\" x2=\"" << fmt2(px(x))
           << "\" y2=\"" << fmt2(kB + 5) << "\" stroke=\"#000000\"/>\n";
        os << "<text x=\"" << fmt2(px(x)) << "\" y=\"" << fmt2(kB + 20)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
    }
    os << "<text x=\"" << fmt2((kL + kR) / 2) << "\" y=\"" << fmt2(kH - 12)
       << "\" font-size=\"13\" text-anchor=\"middle\">SNR (dB)</text>\n";

    // y ticks on integer decades
    const int dstep = std::max(1, static_cast<int>(std::ceil((yhi - ylo) / 10.0)));
    for (int d = static_cast<int>(yhi); d >= static_cast<int>(ylo); d -= dstep) {
        os << "<line x1=\"" << fmt2(kL - 5) << "\" y1=\"" << fmt2(py(d)) << "\" x2=\""
           << fmt2(kL) << "\" y2=\"" << fmt2(py(d)) << "\" stroke=\"#000000\"/>\n";
        os << "<text x=\"" << fmt2(kL - 8) << "\" y=\"" << fmt2(py(d) + 4)
           << "\" font-size=\"12\" text-anchor=\"end\">1e" << d << "</text>\n";
    }

    // dotted reference lines, one per distinct predicted exponent
    std::vector<int> seen;
    for (const CurveData& c : curves) {
        const int d = c.predicted_exponent;
        if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
        int last = -1;
        for (std::size_t i = 0; i < c.gamma_db.size(); ++i)
            if (c.value[i] > 0) last = static_cast<int>(i);
        if (last < 0) continue;
        seen.push_back(d);
        const double x0 = c.gamma_db[last];
        const double a = std::log10(c.value[last]);  // line: v(x) = a - d*(x - x0)/10
        double xs = xmin, xe = xmax;
        if (d > 0) {  // clip to the vertical extent
            xs = std::max(xs, x0 + 10.0 * (a - yhi) / d);
            xe = std::min(xe, x0 + 10.0 * (a - ylo) / d);
        } else if (a < ylo || a > yhi) {
            continue;
        }
        if (xs >= xe) continue;
        const auto v = [&](double x) { return a - d * (x - x0) / 10.0; };
        os << "<line x1=\"" << fmt2(px(xs)) << "\" y1=\"" << fmt2(py(v(xs))) << "\" x2=\""
           << fmt2(px(xe)) << "\" y2=\"" << fmt2(py(v(xe)))
           << "\" stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n";
    }

    // curves + legend
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const CurveData& c = curves[ci];
        const char* color = kPalette[ci % kPaletteSize];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first_pt = true;
        for (std::size_t i = 0; i < c.gamma_db.size(); ++i) {
            if (!(c.value[i] > 0)) continue;
            if (!first_pt) os << ' ';
            first_pt = false;
            os << fmt2(px(c.gamma_db[i])) << ',' << fmt2(py(std::log10(c.value[i])));
        }
        os << "\"/>\n";
        os << "<text x=\"" << fmt2(kL + 10) << "\" y=\"" << fmt2(kT + 16 + 16 * ci)
           << "\" font-size=\"12\" fill=\"" << color << "\">" << c.n << 'x' << c.m << " ["
           << c.alpha_label << "] " << c.source << " (exponent " << c.predicted_exponent
           << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp =
        dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::runtime_error("cannot move temporary into '" + path + "': " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace wishart

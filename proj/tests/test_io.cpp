#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "wishart/curve_io.hpp"
#include "wishart/monte_carlo.hpp"
#include "wishart/pep.hpp"
#include "wishart/run_config.hpp"

using namespace wishart;
namespace fs = std::filesystem;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("wishart-io-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("alpha labels join canonical rationals with semicolons") {
    CHECK(format_alpha({Rational::parse("0.1"), Rational(0), Rational(1)}) == "1/10;0;1");
    CHECK(format_alpha({Rational(3), Rational(0), Rational(5)}) == "3;0;5");
    CHECK(format_alpha({}) == "");
}

TEST_CASE("csv round-trips an exact curve") {
    const auto curve = pep_curve(Dimensions(1, 1), {Rational(1)}, parse_grid("0:20:10"),
                                 CurveSource::Exact);
    const std::string csv = curve_to_csv(curve, true);
    CHECK(csv.rfind("gamma_db,value,stderr,source,n,m,alpha,predicted_exponent,value_exact",
                    0) == 0);
    CHECK(csv.find(",1/2\n") != std::string::npos);   // exact value at 0 dB
    CHECK(csv.find(",1/11\n") != std::string::npos);  // exact value at 10 dB

    const CurveData back = parse_csv(csv);
    REQUIRE(back.gamma_db.size() == 3);
    CHECK(back.gamma_db == std::vector<double>{0.0, 10.0, 20.0});
    CHECK(back.value[0] == 0.5);
    CHECK(back.std_error == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(back.source == "exact");
    CHECK(back.n == 1);
    CHECK(back.m == 1);
    CHECK(back.alpha_label == "1");
    CHECK(back.predicted_exponent == 1);
    REQUIRE(back.has_slope);
    CHECK(back.fitted_slope == doctest::Approx(curve.fitted_slope).epsilon(1e-5));
}

TEST_CASE("csv for a sampled curve fills stderr and leaves value_exact empty") {
    const auto curve =
        mc_pep_curve(Dimensions(1, 1), {Rational(1)}, parse_grid("0:10:5"), 2000, 13);
    const std::string with_exact = curve_to_csv(curve, true);
    // sampled rows end with an empty trailing column
    CHECK(with_exact.find(",mc,1,1,1,1,\n") != std::string::npos);

    const CurveData back = parse_csv(with_exact);
    REQUIRE(back.gamma_db.size() == 3);
    CHECK(back.source == "mc");
    for (double se : back.std_error) CHECK(se > 0.0);

    const CurveData plain = parse_csv(curve_to_csv(curve, false));
    CHECK(plain.std_error == back.std_error);
}

TEST_CASE("csv parser rejects malformed input") {
    CHECK_THROWS_AS((void)parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_csv("just,some,words\n1,2,3\n"), std::invalid_argument);
    const std::string header = "gamma_db,value,stderr,source,n,m,alpha,predicted_exponent\n";
    CHECK_THROWS_AS((void)parse_csv(header), std::invalid_argument);  // no data rows
    CHECK_THROWS_AS((void)parse_csv(header + "0,1,,exact,1,1\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_csv(header + "zero,1,,exact,1,1,1,1\n"),
                    std::invalid_argument);
    // metadata must agree across rows
    CHECK_THROWS_AS((void)parse_csv(header + "0,1,,exact,1,1,1,1\n5,1,,exact,2,2,1,1\n"),
                    std::invalid_argument);
}

TEST_CASE("csv parser tolerates comment placement and CRLF line endings") {
    const std::string text =
        "# produced by a run\r\n"
        "gamma_db,value,stderr,source,n,m,alpha,predicted_exponent\r\n"
        "0,0.5,,exact,1,1,1,1\r\n"
        "10,0.0909,,exact,1,1,1,1\r\n"
        "# fitted_slope=-0.934000 predicted_exponent=1 window=2\r\n";
    const CurveData c = parse_csv(text);
    REQUIRE(c.gamma_db.size() == 2);
    CHECK(c.value[1] == doctest::Approx(0.0909));
    REQUIRE(c.has_slope);
    CHECK(c.fitted_slope == doctest::Approx(-0.934));
}

TEST_CASE("svg output is deterministic and well formed") {
    const auto curve = pep_curve(Dimensions(2, 2), {Rational(1), Rational(0)},
                                 parse_grid("0:20:5"), CurveSource::Exact);
    const CurveData data = parse_csv(curve_to_csv(curve));
    const std::string a = render_svg({data});
    const std::string b = render_svg({data});
    CHECK(a == b);
    CHECK(a.rfind("<svg ", 0) == 0);
    CHECK(a.substr(a.size() - 7) == "</svg>\n");
    CHECK(count_occurrences(a, "<polyline") == 1);
    CHECK(count_occurrences(a, "stroke-dasharray") == 1);
    CHECK(a.find("2x2 [1;0] exact (exponent 4)") != std::string::npos);
    CHECK(a.find("SNR (dB)") != std::string::npos);
}

TEST_CASE("svg draws one reference line per distinct predicted exponent") {
    const auto grid = parse_grid("0:20:5");
    const CurveData exact = parse_csv(curve_to_csv(
        pep_curve(Dimensions(2, 2), {Rational(1), Rational(0)}, grid, CurveSource::Exact)));
    const CurveData bound = parse_csv(curve_to_csv(
        pep_curve(Dimensions(2, 2), {Rational(1), Rational(0)}, grid, CurveSource::Bound)));
    const CurveData other = parse_csv(curve_to_csv(
        pep_curve(Dimensions(2, 2), {Rational(0), Rational(1)}, grid, CurveSource::Exact)));

    // same exponent twice: the dashed line is shared
    const std::string two_same = render_svg({exact, bound});
    CHECK(count_occurrences(two_same, "<polyline") == 2);
    CHECK(count_occurrences(two_same, "stroke-dasharray") == 1);

    const std::string two_diff = render_svg({exact, other});
    CHECK(count_occurrences(two_diff, "stroke-dasharray") == 2);
}

TEST_CASE("svg rejects unplottable input") {
    CHECK_THROWS_AS((void)render_svg({}), std::invalid_argument);
    CurveData flat;
    flat.gamma_db = {0.0, 5.0};
    flat.value = {0.0, -1.0};
    flat.std_error = {0.0, 0.0};
    flat.source = "exact";
    flat.n = flat.m = 1;
    flat.alpha_label = "1";
    flat.predicted_exponent = 1;
    CHECK_THROWS_AS((void)render_svg({flat}), std::invalid_argument);
}

TEST_CASE("atomic write and read round-trip without leaving temporaries") {
    TempDir tmp;
    const std::string path = (tmp.path / "out.csv").string();
    write_file_atomic(path, "hello\nworld\n");
    CHECK(read_file(path) == "hello\nworld\n");

    write_file_atomic(path, "replaced");
    CHECK(read_file(path) == "replaced");

    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(tmp.path)) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);  // no .tmp leftovers

    CHECK_THROWS_AS((void)read_file((tmp.path / "missing.csv").string()), std::runtime_error);
    CHECK_THROWS_AS(
        (void)write_file_atomic((tmp.path / "no-such-dir" / "out.csv").string(), "x"),
        std::runtime_error);
}

TEST_CASE("run config parses, defaults, and round-trips") {
    const RunConfig cfg = RunConfig::from_file_text(
        "# comment line\n"
        "\n"
        "n = 3\r\n"
        "alpha=0,1,0\n"
        "grid=0:40:5\n"
        "n=4\n");  // later key wins
    CHECK(cfg.get("n") == "4");
    CHECK(cfg.get("alpha") == "0,1,0");
    CHECK(cfg.has("grid"));
    CHECK_FALSE(cfg.has("m"));
    CHECK_THROWS_AS((void)cfg.get("m"), std::invalid_argument);

    RunConfig copy = RunConfig::from_file_text(cfg.to_text());
    CHECK(copy.to_text() == cfg.to_text());

    copy.set_default("n", "9");
    CHECK(copy.get("n") == "4");  // existing value kept
    copy.set_default("m", "9");
    CHECK(copy.get("m") == "9");
    copy.set("m", "2");
    CHECK(copy.get("m") == "2");
}

TEST_CASE("run config rejects lines without a key") {
    CHECK_THROWS_AS((void)RunConfig::from_file_text("n=3\nbogus line\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)RunConfig::from_file_text("=3\n"), std::invalid_argument);
}

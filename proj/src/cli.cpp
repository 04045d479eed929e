#include "orbitkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitkit/asymptotics.hpp"
#include "orbitkit/output.hpp"
#include "orbitkit/verify.hpp"
#include "orbitkit/zeta.hpp"

namespace orbitkit {

namespace {

constexpr std::uint64_t kMaxTableSize = 10000;

struct CommonOptions {
    std::string map = "f";
    std::string custom_file;
    std::string format = "csv";
    int digits = 12;
    std::string output;
};

void add_output_options(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--digits", opts.digits, "Decimal places for real numbers")->check(CLI::Range(1, 1000));
    cmd->add_option("--output,-o", opts.output, "Write to this file instead of standard output");
}

void add_map_options(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--map", opts.map, "f (3-adic extension), g (circle doubling), f2, g2 or custom")
        ->check(CLI::IsMember({"f", "g", "f2", "g2", "custom"}));
    cmd->add_option("--custom-file", opts.custom_file, "Orbit counts O_n, one per line (with --map custom)");
}

MapSpec resolve_map(const CommonOptions& opts)
{
    if (opts.map == "custom") {
        if (opts.custom_file.empty()) {
            throw ValidationError("--map custom needs --custom-file");
        }
        std::ifstream in(opts.custom_file);
        if (!in) {
            throw ValidationError("cannot read custom orbit file '" + opts.custom_file + "'");
        }
        return MapSpec::custom(read_custom_orbits(in));
    }
    if (!opts.custom_file.empty()) {
        throw ValidationError("--custom-file is only valid with --map custom");
    }
    const auto f = MapSpec::three_adic_extension();
    const auto g = MapSpec::circle_doubling();
    if (opts.map == "f") {
        return f;
    }
    if (opts.map == "g") {
        return g;
    }
    return MapSpec::iterate(opts.map == "f2" ? f : g, 2);
}

void require_max(std::uint64_t max, const char* flag = "--max")
{
    if (max < 1 || max > kMaxTableSize) {
        throw ValidationError(std::string(flag) + " must lie in 1.." + std::to_string(kMaxTableSize));
    }
}

OutputConfig make_config(const CommonOptions& opts)
{
    OutputConfig c;
    c.format = opts.format == "json" ? OutputConfig::Format::Json : OutputConfig::Format::Csv;
    c.digits = opts.digits;
    if (!opts.output.empty()) {
        c.path = opts.output;
    }
    return c;
}

void emit(ResultTable& table, const CommonOptions& opts, long bits, std::ostream& out)
{
    table.add_meta("digits", std::to_string(opts.digits));
    table.add_meta("precision_bits", std::to_string(bits));
    const auto config = make_config(opts);
    if (!config.path) {
        write_table(table, config, out);
        return;
    }
    std::ofstream file(*config.path);
    if (!file) {
        throw ValidationError("cannot open output file '" + *config.path + "'");
    }
    write_table(table, config, file);
    if (!file) {
        throw ValidationError("failed writing output file '" + *config.path + "'");
    }
}

void add_map_meta(ResultTable& t, const MapSpec& spec)
{
    t.add_meta("map", spec.name());
    t.add_meta("entropy", spec.entropy().to_string());
}

std::string fixed(const Rational& q, long bits, int digits) { return Real::from_rational(q, bits).to_fixed(digits); }

std::string fixed(double v, long bits, int digits) { return Real::from_double(v, bits).to_fixed(digits); }

Cell small(std::uint64_t v) { return static_cast<std::int64_t>(v); }

AngleTurns parse_angle(const std::string& text)
{
    std::int64_t num = 0;
    std::uint64_t den = 1;
    char slash = 0;
    std::istringstream in(text);
    in >> num;
    if (in.peek() == '/') {
        in >> slash >> den;
    }
    if (!in || !in.eof() || den == 0) {
        throw ValidationError("--angle expects num/den in turns, e.g. 1/3; got '" + text + "'");
    }
    return {num, den};
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact orbit counting and zeta-function data for the circle-doubling map and its 3-adic extension",
                 "orbitkit"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::uint64_t max = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t degree = 0;
    std::string angle = "1/3";
    std::vector<double> radii;
    unsigned terms_j = 10;
    std::uint64_t series_terms = 2000;
    bool inject_fault = false;

    auto* table_cmd = app.add_subcommand("table", "F_n, L_n, O_n for n = 1..max");
    add_map_options(table_cmd, opts);
    add_output_options(table_cmd, opts);
    table_cmd->add_option("--max", max, "Largest n")->required();

    auto* pnt_cmd = app.add_subcommand("pnt", "Prime orbit counts pi(X) and the ratio X pi(X) / 2^(X+1)");
    add_map_options(pnt_cmd, opts);
    add_output_options(pnt_cmd, opts);
    pnt_cmd->add_option("--max", max, "Largest X")->required();
    pnt_cmd->add_option("--burn-in", burn_in, "First X of the reported window (default 64, or 1 if max < 64)");

    auto* merten_cmd = app.add_subcommand("merten", "Exact partial sums of O_n / 2^n against ln X");
    add_map_options(merten_cmd, opts);
    add_output_options(merten_cmd, opts);
    merten_cmd->add_option("--max", max, "Largest X")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Dynamical zeta function data");
    zeta_cmd->require_subcommand(1);
    auto* coeffs_cmd = zeta_cmd->add_subcommand("coeffs", "Taylor coefficients c_n of zeta");
    add_map_options(coeffs_cmd, opts);
    add_output_options(coeffs_cmd, opts);
    coeffs_cmd->add_option("--degree", degree, "Truncation degree")->required();
    auto* xi1_cmd = zeta_cmd->add_subcommand("xi1-check", "Check the 3-adic regrouping of xi_1 exactly");
    add_output_options(xi1_cmd, opts);
    xi1_cmd->add_option("--degree", degree, "Truncation degree")->default_val(500);
    auto* boundary_cmd = zeta_cmd->add_subcommand("boundary", "Radial scan of |zeta| towards |z| = 1/2");
    add_map_options(boundary_cmd, opts);
    add_output_options(boundary_cmd, opts);
    boundary_cmd->add_option("--angle", angle, "Ray angle in turns, num/den")->default_val("1/3");
    boundary_cmd->add_option("--radii", radii, "Comma-separated radii in (0, 1/2)")->delimiter(',')->required();
    boundary_cmd->add_option("--terms", terms_j, "Product factors j = 1..J")->default_val(10);
    boundary_cmd->add_option("--degree", series_terms, "Series truncation degree N")->default_val(2000);

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite; exit 2 on any failure");
    add_output_options(verify_cmd, opts);
    verify_cmd->add_option("--max", max, "Window for the 'for all n <= max' checks")->default_val(500);
    verify_cmd->add_flag("--inject-fault", inject_fault, "Corrupt O_2(f) first (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        const long bits = precision_from_env();
        const int digits = opts.digits;
        ResultTable t;

        if (table_cmd->parsed()) {
            require_max(max);
            const auto spec = resolve_map(opts);
            const auto table = build_table(spec, max);
            t.columns = {"n", "F_n", "L_n", "O_n"};
            for (std::uint64_t n = 1; n <= max; ++n) {
                t.rows.push_back({small(n), to_string(table.fix(n)), to_string(table.least(n)),
                                  to_string(table.orbits(n))});
            }
            add_map_meta(t, spec);
            t.add_meta("max", std::to_string(max));
        } else if (pnt_cmd->parsed()) {
            require_max(max);
            if (pnt_cmd->count("--burn-in") == 0) {
                burn_in = max >= kBands.burn_in ? kBands.burn_in : 1;
            }
            const auto spec = resolve_map(opts);
            const auto table = build_table(spec, max);
            const auto points = ratio_series(table, max, burn_in);
            t.columns = {"X", "pi", "ratio", "running_min", "running_max"};
            for (const auto& p : points) {
                t.rows.push_back({small(p.x), to_string(p.pi), fixed(p.ratio, bits, digits),
                                  fixed(p.running_min, bits, digits), fixed(p.running_max, bits, digits)});
            }
            add_map_meta(t, spec);
            t.add_meta("max", std::to_string(max));
            t.add_meta("burn_in", std::to_string(burn_in));
            t.add_meta("ratio_band", "[1/3 - " + fixed(kBands.ratio_tolerance, bits, 2) + ", 1 + " +
                                         fixed(kBands.ratio_tolerance, bits, 2) + "]");
            std::string clusters;
            for (const auto& c : cluster_ratios(points)) {
                clusters += (clusters.empty() ? "" : ";") + fixed(c.low, bits, 4) + "-" + fixed(c.high, bits, 4) +
                            ":" + std::to_string(c.count);
            }
            t.add_meta("ratio_clusters", clusters);
        } else if (merten_cmd->parsed()) {
            require_max(max);
            const auto spec = resolve_map(opts);
            const auto table = build_table(spec, max);
            const auto points = merten_series(table, max, bits);
            t.columns = {"X", "sum", "sum_decimal", "ln_X", "normalized"};
            for (const auto& p : points) {
                t.rows.push_back({small(p.x), to_string(p.sum), fixed(p.sum, bits, digits), p.log_x.to_fixed(digits),
                                  p.normalized ? p.normalized->to_fixed(digits) : std::string()});
            }
            add_map_meta(t, spec);
            t.add_meta("max", std::to_string(max));
            t.add_meta("slack", fixed(kBands.merten_slack, bits, 2));
            if (max >= kBands.merten_start) {
                const auto c = merten_constants(points, kBands.merten_start);
                t.add_meta("sum_minus_lnX", "[" + fixed(c.min_minus_log, bits, 6) + ", " +
                                                fixed(c.max_minus_log, bits, 6) + "] over X >= 16");
                t.add_meta("sum_minus_half_lnX", "[" + fixed(c.min_minus_half_log, bits, 6) + ", " +
                                                     fixed(c.max_minus_half_log, bits, 6) + "] over X >= 16");
            }
        } else if (coeffs_cmd->parsed()) {
            require_max(degree, "--degree");
            const auto spec = resolve_map(opts);
            const auto table = build_table(spec, degree);
            const auto zeta = zeta_series(table, degree);
            t.columns = {"n", "c_n"};
            for (std::uint64_t n = 0; n <= degree; ++n) {
                t.rows.push_back({small(n), to_string(zeta[n].get_num())});
            }
            add_map_meta(t, spec);
            t.add_meta("degree", std::to_string(degree));
        } else if (xi1_cmd->parsed()) {
            require_max(degree, "--degree");
            if (degree < 2) {
                throw ValidationError("--degree must be at least 2");
            }
            const auto direct = xi1_direct(degree);
            const auto closed = xi1_closed_form(degree);
            std::string mismatch;
            for (std::uint64_t n = 0; n <= degree && mismatch.empty(); ++n) {
                if (direct[n] != closed[n]) {
                    mismatch = std::to_string(n);
                }
            }
            t.columns = {"degree", "first_mismatch", "status"};
            t.rows.push_back({small(degree), mismatch, std::string(mismatch.empty() ? "PASS" : "FAIL")});
            t.add_meta("check", "xi1_direct == xi1_closed_form");
            emit(t, opts, bits, out);
            return mismatch.empty() ? kExitOk : kExitVerification;
        } else if (boundary_cmd->parsed()) {
            require_max(series_terms, "--degree");
            if (opts.map != "f") {
                throw ValidationError("zeta boundary applies to --map f only");
            }
            const auto a = parse_angle(angle);
            const auto table = build_table(MapSpec::three_adic_extension(), series_terms);
            const auto rows = radial_scan(a, radii, terms_j, series_terms, table);
            t.columns = {"radius", "angle_num", "angle_den", "product_modulus", "series_modulus", "J", "N"};
            for (const auto& r : rows) {
                t.rows.push_back({fixed(r.radius, bits, digits), r.angle_num, std::to_string(r.angle_den),
                                  fixed(r.product_modulus, bits, digits), fixed(r.series_modulus, bits, digits),
                                  small(r.terms_j), small(r.terms_n)});
            }
            add_map_meta(t, MapSpec::three_adic_extension());
            t.add_meta("angle_turns", std::to_string(a.num) + "/" + std::to_string(a.den));
            t.add_meta("J", std::to_string(terms_j));
            t.add_meta("N", std::to_string(series_terms));
            if (rows.size() >= 5) {
                t.add_meta("product_decays_last5", decays_toward_zero(rows) ? "yes" : "no");
            }
        } else if (verify_cmd->parsed()) {
            require_max(max);
            const auto results = run_invariants({max, inject_fault});
            bool all_pass = true;
            t.columns = {"invariant", "parameters", "status", "detail"};
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                t.rows.push_back({r.name, r.parameters, std::string(r.pass ? "PASS" : "FAIL"), r.detail});
            }
            t.add_meta("max", std::to_string(max));
            t.add_meta("result", all_pass ? "PASS" : "FAIL");
            emit(t, opts, bits, out);
            return all_pass ? kExitOk : kExitVerification;
        }
        emit(t, opts, bits, out);
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "orbitkit: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "orbitkit: internal error: " << e.what() << '\n';
        return kExitVerification;
    }
}

} // namespace orbitkit

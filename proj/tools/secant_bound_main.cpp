// secant-bound: Schrodinger secant lower bounds E^(s) <= E for ground states
// of semirelativistic Hamiltonians sqrt(m^2 + p^2) + c r^P, with reference
// eigenvalues and numerical certification of the comparison hypotheses.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "secant/secant.hpp"
#include "secant/record_json.hpp"

namespace {

using nlohmann::json;
using namespace secant;

enum class Format { table, csv, json_fmt };

struct CommonOptions {
    double mass = 1.0;
    double coupling = 1.0;
    double power = 2.0;
    std::string format = "table";
    std::string out;
    double tol = 0.0;   // 0 = library defaults
    int grid = 0;       // 0 = library default n_points

    Format parsed_format() const {
        if (format == "table") return Format::table;
        if (format == "csv") return Format::csv;
        if (format == "json") return Format::json_fmt;
        throw CLI::ValidationError("--format must be csv, json or table");
    }

    BoundOptions bound_options() const {
        BoundOptions opts;
        if (grid > 0) opts.n_points = grid;
        if (tol > 0.0) opts.tol_scale = tol / QuadratureSpec{}.abs_tol;
        return opts;
    }

    int reference_points() const { return grid > 0 ? grid : 4000; }
};

OutputRecord make_record(const BoundReport& rep) {
    OutputRecord r;
    r.m = rep.m;
    r.c = rep.c;
    r.potential = family_name(rep.family);
    r.beta = rep.beta;
    r.gamma = rep.gamma;
    r.E_lower = rep.E_lower;
    r.E_reference = rep.E_reference;
    r.k_cross = rep.k_cross;
    bool nodeless = rep.certification.comparison.nodeless;
    bool monotone = rep.certification.comparison.phi_over_k_monotone;
    if (rep.certification.semirelativistic) {
        nodeless = nodeless && rep.certification.semirelativistic->nodeless;
        monotone = monotone && rep.certification.semirelativistic->phi_over_k_monotone;
    }
    r.cert_nodeless = nodeless;
    r.cert_monotone = monotone;
    r.cert_W_nonneg = rep.certification.w.nonnegative;
    r.round_floats();
    return r;
}

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("-");
}

void emit_table(std::ostream& os, const std::vector<OutputRecord>& records) {
    const std::vector<std::string> headers = {
        "m",       "c",          "potential",     "beta",         "gamma",
        "E_lower", "E_reference", "k_cross",      "cert_nodeless", "cert_monotone",
        "cert_W_nonneg"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records)
        rows.push_back({format_double(r.m), format_double(r.c), r.potential,
                        format_double(r.beta), cell(r.gamma), format_double(r.E_lower),
                        cell(r.E_reference), format_double(r.k_cross),
                        r.cert_nodeless ? "true" : "false",
                        r.cert_monotone ? "true" : "false",
                        r.cert_W_nonneg ? "true" : "false"});
    std::vector<std::size_t> width(headers.size());
    for (std::size_t j = 0; j < headers.size(); ++j) {
        width[j] = headers[j].size();
        for (const auto& row : rows) width[j] = std::max(width[j], row[j].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << row[j] << std::string(width[j] - row[j].size(), ' ');
            os << (j + 1 < row.size() ? "  " : "");
        }
        os << '\n';
    };
    line(headers);
    for (const auto& row : rows) line(row);
}

void emit_records(std::ostream& os, const std::vector<OutputRecord>& records, Format fmt) {
    switch (fmt) {
        case Format::csv:
            os << csv_header() << '\n';
            for (const auto& r : records) os << to_csv_row(r) << '\n';
            break;
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& r : records) arr.push_back(to_json(r));
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::table:
            emit_table(os, records);
            break;
    }
}

int run_oscillator(const CommonOptions& opt) {
    auto rep = oscillator_bound(opt.mass, opt.coupling, opt.bound_options());
    rep.E_reference = oscillator_reference(opt.mass, opt.coupling, opt.reference_points()).E;
    emit_records(std::cout, {make_record(rep)}, opt.parsed_format());
    return 0;
}

int run_linear(const CommonOptions& opt) {
    auto rep = general_power_bound(opt.mass, opt.coupling, 1.0, opt.bound_options());
    if (opt.coupling == 1.0 &&
        std::abs(opt.mass - linear_reference_mass) <= 1e-6 * linear_reference_mass)
        rep.E_reference = linear_reference(opt.mass).E;
    emit_records(std::cout, {make_record(rep)}, opt.parsed_format());
    return 0;
}

int run_power(const CommonOptions& opt) {
    auto rep = general_power_bound(opt.mass, opt.coupling, opt.power, opt.bound_options());
    if (opt.power == 2.0)
        rep.E_reference = oscillator_reference(opt.mass, opt.coupling, opt.reference_points()).E;
    emit_records(std::cout, {make_record(rep)}, opt.parsed_format());
    return 0;
}

struct PublishedRow {
    double m, beta, E_s, E;
};

constexpr PublishedRow kPublished[10] = {
    {0.1, 0.4034, 2.0055, 2.3422}, {0.2, 0.3788, 2.0464, 2.3544},
    {0.5, 0.3190, 2.1943, 2.4323}, {1.0, 0.2506, 2.5019, 2.6640},
    {2.0, 0.1734, 3.2492, 3.3361}, {3.0, 0.1315, 4.0880, 4.1415},
    {4.0, 0.1056, 4.9747, 5.0105}, {5.0, 0.0879, 5.8897, 5.9153},
    {7.0, 0.0657, 7.7692, 7.7840}, {10.0, 0.0475, 10.6539, 10.6619}};

int run_table1(const CommonOptions& opt) {
    struct RowResult {
        OutputRecord rec;
        PublishedRow pub;
    };
    std::vector<std::future<RowResult>> futures;
    for (const PublishedRow& pub : kPublished) {
        futures.push_back(std::async(std::launch::async, [pub, &opt]() {
            auto rep = oscillator_bound(pub.m, 1.0, opt.bound_options());
            rep.E_reference = oscillator_reference(pub.m, 1.0, opt.reference_points()).E;
            return RowResult{make_record(rep), pub};
        }));
    }

    std::vector<RowResult> rows;
    for (auto& fut : futures) rows.push_back(fut.get());  // fixed row order

    const Format fmt = opt.parsed_format();
    auto dev = [](double a, double b) { return std::abs(a - b); };
    if (fmt == Format::csv) {
        std::cout << csv_header()
                  << ",beta_published,E_lower_published,E_reference_published,"
                     "beta_dev,E_lower_dev,E_reference_dev\n";
        for (const auto& row : rows) {
            std::cout << to_csv_row(row.rec) << ',' << format_double(row.pub.beta) << ','
                      << format_double(row.pub.E_s) << ',' << format_double(row.pub.E) << ','
                      << format_double(dev(row.rec.beta, row.pub.beta)) << ','
                      << format_double(dev(row.rec.E_lower, row.pub.E_s)) << ','
                      << format_double(dev(*row.rec.E_reference, row.pub.E)) << '\n';
        }
    } else if (fmt == Format::json_fmt) {
        json arr = json::array();
        for (const auto& row : rows) {
            json j = to_json(row.rec);
            j["beta_published"] = row.pub.beta;
            j["E_lower_published"] = row.pub.E_s;
            j["E_reference_published"] = row.pub.E;
            j["beta_dev"] = round10(dev(row.rec.beta, row.pub.beta));
            j["E_lower_dev"] = round10(dev(row.rec.E_lower, row.pub.E_s));
            j["E_reference_dev"] = round10(dev(*row.rec.E_reference, row.pub.E));
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::printf("%-5s %-12s %-9s %-10s %-12s %-10s %-12s %-10s %-9s\n", "m", "beta",
                    "beta_pub", "beta_dev", "E_lower", "E_s_pub", "E_reference", "E_pub",
                    "E_dev");
        for (const auto& row : rows) {
            std::printf("%-5s %-12s %-9s %-10.2e %-12s %-10s %-12s %-10s %-9.2e\n",
                        format_double(row.rec.m).c_str(), format_double(row.rec.beta).c_str(),
                        format_double(row.pub.beta).c_str(), dev(row.rec.beta, row.pub.beta),
                        format_double(row.rec.E_lower).c_str(),
                        format_double(row.pub.E_s).c_str(),
                        format_double(*row.rec.E_reference).c_str(),
                        format_double(row.pub.E).c_str(),
                        dev(*row.rec.E_reference, row.pub.E));
        }
    }
    return 0;
}

int run_figure1(const CommonOptions& opt) {
    BoundOptions bopts = opt.bound_options();
    bopts.certify = false;
    auto rep = oscillator_bound(opt.mass, opt.coupling, bopts);

    std::ofstream file(opt.out, std::ios::binary);
    if (!file)
        throw std::invalid_argument("figure1: cannot open output path '" + opt.out + "'");
    file << "k_squared,K,S\n";
    for (int i = 0; i <= 500; ++i) {
        const double k2 = 25.0 * i / 500.0;
        const double K = std::sqrt(opt.mass * opt.mass + k2);
        const double S = opt.mass + rep.beta * k2;
        file << format_double(k2) << ',' << format_double(K) << ',' << format_double(S)
             << '\n';
    }
    if (!file.flush())
        throw std::invalid_argument("figure1: write to '" + opt.out + "' failed");
    return 0;
}

struct VerifyLine {
    std::string name;
    std::string status;  // pass | fail | unavailable
    std::string detail;
};

int run_verify(const CommonOptions& opt) {
    std::vector<VerifyLine> lines;
    bool ok = true;
    auto flag = [&](const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back({name, pass ? "pass" : "fail", detail});
        ok = ok && pass;
    };

    const double m = opt.mass, c = opt.coupling, P = opt.power;
    BoundOptions bopts = opt.bound_options();

    BoundReport rep = (P == 2.0) ? oscillator_bound(m, c, bopts)
                                 : general_power_bound(m, c, P, bopts);

    flag("phi_s nodeless", rep.certification.comparison.nodeless);
    flag("phi_s phi/k monotone", rep.certification.comparison.phi_over_k_monotone);
    if (rep.certification.semirelativistic) {
        flag("phi nodeless", rep.certification.semirelativistic->nodeless);
        flag("phi phi/k monotone", rep.certification.semirelativistic->phi_over_k_monotone);
    } else {
        lines.push_back({"phi nodeless", "unavailable", "no momentum-space solve for P != 2"});
        lines.push_back({"phi phi/k monotone", "unavailable",
                         "no momentum-space solve for P != 2"});
    }
    flag("W nonnegative on grid", rep.certification.w.nonnegative);
    flag("W unimodal", rep.certification.w.unimodal);
    flag("W(inf) residual <= 1e-8 max W", rep.certification.w.w_infinity_zero,
         format_double(rep.certification.w.w_infinity_residual));

    json extra;
    if (P == 2.0) {
        // identity I_direct = I_by_parts = (E - E^s) * overlap on the shared grid
        auto conv = eigenvalue_converged_auto(
            c, [m](double k) { return std::sqrt(m * m + k * k); });
        const double E = conv.report.extrapolated;
        auto phi = momentum_from_radial(conv.solution);
        auto phi_s = gaussian_wavefunction(std::sqrt(rep.beta / c), phi.k_grid);
        auto id = eval_I(phi, phi_s, m, rep.beta);
        const double E_s = rep.E_lower;
        const double rel_dev = std::abs(id.I_direct - id.I_by_parts) /
                               std::max(std::abs(id.I_direct), 1e-300);
        flag("I_direct = I_by_parts (1e-6 rel)", rel_dev <= 1e-6, format_double(rel_dev));
        flag("I >= 0", id.I_direct >= 0.0, format_double(id.I_direct));
        const double gap = id.I_direct / id.overlap;
        flag("I/overlap = E - E^s (2e-3)", std::abs(gap - (E - E_s)) <= 2e-3,
             format_double(gap) + " vs " + format_double(E - E_s));
        extra["I_direct"] = round10(id.I_direct);
        extra["I_by_parts"] = round10(id.I_by_parts);
        extra["overlap"] = round10(id.overlap);
        extra["I_over_overlap"] = round10(gap);
        extra["E_minus_E_lower"] = round10(E - E_s);
    }

    if (opt.parsed_format() == Format::json_fmt) {
        json j;
        j["m"] = round10(m);
        j["c"] = round10(c);
        j["power"] = round10(P);
        j["beta"] = round10(rep.beta);
        j["E_lower"] = round10(rep.E_lower);
        j["W_infinity_residual"] = round10(rep.certification.w.w_infinity_residual);
        json checks = json::array();
        for (const auto& line : lines)
            checks.push_back({{"name", line.name}, {"status", line.status},
                              {"detail", line.detail}});
        j["checks"] = checks;
        if (!extra.is_null()) j["identity"] = extra;
        j["all_passed"] = ok;
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("secant bound certification: m=%s c=%s P=%s beta=%s\n",
                    format_double(m).c_str(), format_double(c).c_str(),
                    format_double(P).c_str(), format_double(rep.beta).c_str());
        for (const auto& line : lines)
            std::printf("  %-34s %-12s %s\n", line.name.c_str(), line.status.c_str(),
                        line.detail.c_str());
        std::printf("result: %s\n", ok ? "all checks passed" : "CERTIFICATION FAILED");
    }
    return ok ? 0 : 4;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Schrodinger secant lower bounds for semirelativistic spectra"};
    app.require_subcommand(1);
    CommonOptions opt;

    auto add_common = [&](CLI::App* sub, bool with_mass, bool with_power) {
        if (with_mass) sub->add_option("--mass", opt.mass, "particle mass (> 0)")->required();
        sub->add_option("--coupling", opt.coupling, "potential coupling c (> 0)")
            ->capture_default_str();
        if (with_power)
            sub->add_option("--power", opt.power, "potential exponent P (> 0)")->required();
        sub->add_option("--format", opt.format, "output format: csv|json|table")
            ->capture_default_str();
        sub->add_option("--tol", opt.tol, "override the default quadrature tolerance");
        sub->add_option("--grid", opt.grid, "override the radial grid point count");
    };

    auto* osc = app.add_subcommand("oscillator", "secant bound for V = c r^2");
    add_common(osc, true, false);
    auto* lin = app.add_subcommand("linear", "secant bound for V = c r");
    add_common(lin, true, false);
    auto* pow_cmd = app.add_subcommand("power", "secant bound for V = c r^P");
    add_common(pow_cmd, true, true);
    auto* tab = app.add_subcommand("table1", "reproduce the ten-mass oscillator table");
    add_common(tab, false, false);
    auto* fig = app.add_subcommand("figure1", "kinetic curves K and S against k^2");
    add_common(fig, true, false);
    fig->add_option("--out", opt.out, "output CSV path")->required();
    auto* ver = app.add_subcommand("verify", "certify the comparison-theorem hypotheses");
    add_common(ver, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (osc->parsed()) return run_oscillator(opt);
    if (lin->parsed()) return run_linear(opt);
    if (pow_cmd->parsed()) return run_power(opt);
    if (tab->parsed()) return run_table1(opt);
    if (fig->parsed()) return run_figure1(opt);
    if (ver->parsed()) return run_verify(opt);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const secant::DivergentTail& e) {
        std::cerr << "error (divergent tail): " << e.what() << '\n';
        return 3;
    } catch (const secant::MassTooSmall& e) {
        std::cerr << "error (invalid input): " << e.what() << '\n';
        return 2;
    } catch (const secant::UnsupportedMass& e) {
        std::cerr << "error (invalid input): " << e.what() << '\n';
        return 2;
    } catch (const secant::Error& e) {
        std::cerr << "error (numerical): " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (invalid input): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}

// sitnikov: orbit traces, period/action tables, resonance catalogs and the
// self-verification suites.
//
// Exit status: 0 success, 2 argument or domain error, 3 verification
// failure, 4 numerical convergence failure.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sitnikov/cli.hpp"

namespace {

using namespace sitnikov;

struct Output {
    std::string path = "-";
    io::Format format = io::Format::Csv;
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.path, "output file ('-' for stdout)");
    cmd->add_option("--format", out.format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, io::Format>{{"csv", io::Format::Csv},
                                                                               {"json", io::Format::Json}}));
}

void emit(const io::Document& doc, const Output& out) {
    if (out.path == "-") {
        io::write(std::cout, doc, out.format);
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw DomainError("--out: cannot open '" + out.path + "' for writing");
    io::write(file, doc, out.format);
    if (!file) throw DomainError("--out: writing '" + out.path + "' failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form orbits, resonance catalogs and self-checks for two secondaries above a circular binary"};
    app.set_version_flag("--version", std::string(io::kVersion));
    app.require_subcommand(1);

    Output out;

    cli::OrbitConfig orbit;
    auto* orbit_cmd = app.add_subcommand("orbit", "trace (t, q3, p3, q4, p4, H) for two secondaries");
    orbit_cmd->add_option("--h3", orbit.h3, "partial energy of body 3, in (-2, 0)");
    orbit_cmd->add_option("--h4", orbit.h4, "partial energy of body 4, in (-2, 0)");
    orbit_cmd->add_option("--nu0-3", orbit.nu0_3, "initial phase offset of body 3");
    orbit_cmd->add_option("--nu0-4", orbit.nu0_4, "initial phase offset of body 4");
    orbit_cmd->add_option("--t-end", orbit.t_end, "final time");
    orbit_cmd->add_option("--dt", orbit.dt, "output (and integration) step");
    orbit_cmd->add_option("--mode", orbit.mode, "closed-form, integrate or bounce")
        ->transform(CLI::CheckedTransformer(std::map<std::string, cli::OrbitMode>{
            {"closed-form", cli::OrbitMode::ClosedForm},
            {"integrate", cli::OrbitMode::Integrate},
            {"bounce", cli::OrbitMode::Bounce}}));
    add_output_options(orbit_cmd, out);

    cli::PeriodTableConfig table;
    auto* table_cmd = app.add_subcommand("period-table", "tabulate (h, k, T, J, Omega) on a uniform energy grid");
    table_cmd->add_option("--h-min", table.h_min, "first energy, > -2");
    table_cmd->add_option("--h-max", table.h_max, "last energy, < 0");
    table_cmd->add_option("--steps", table.steps, "number of rows, >= 2");
    add_output_options(table_cmd, out);

    cli::CatalogConfig catalog;
    auto* catalog_cmd = app.add_subcommand("catalog", "list admissible resonances with p <= p-max");
    catalog_cmd->add_option("--p-max", catalog.p_max, "largest common multiple p");
    add_output_options(catalog_cmd, out);

    cli::InvertConfig invert;
    auto* invert_cmd = app.add_subcommand("invert", "energy h with return time T(h) = --period");
    invert_cmd->add_option("--period", invert.period, "target return time, > pi/sqrt(2)")->required();
    add_output_options(invert_cmd, out);

    cli::VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the property and oracle suites");
    verify_cmd->add_option("--suite", verify.suite, "elliptic, closedform, dynamics, resonance or all")
        ->transform(CLI::CheckedTransformer(std::map<std::string, verify::Suite>{
            {"elliptic", verify::Suite::Elliptic},
            {"closedform", verify::Suite::Closedform},
            {"dynamics", verify::Suite::Dynamics},
            {"resonance", verify::Suite::Resonance},
            {"all", verify::Suite::All}}));
    verify_cmd->add_option("--period-scale", verify.options.period_scale,
                           "harness self-test: multiply T(h) in the ODE-oracle check by this factor")
        ->group("Testing");
    add_output_options(verify_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kArgumentError;
    }

    try {
        if (*orbit_cmd) emit(cli::run_orbit(orbit), out);
        if (*table_cmd) emit(cli::run_period_table(table), out);
        if (*catalog_cmd) emit(cli::run_catalog(catalog), out);
        if (*invert_cmd) emit(cli::run_invert(invert), out);
        if (*verify_cmd) {
            const auto outcome = cli::run_verify(verify);
            emit(outcome.document, out);
            if (!outcome.passed) {
                std::cerr << "sitnikov verify: one or more checks failed\n";
                return cli::kVerifyFailure;
            }
        }
    } catch (const DomainError& e) {
        std::cerr << "sitnikov: " << e.what() << '\n';
        return cli::kArgumentError;
    } catch (const ConvergenceError& e) {
        std::cerr << "sitnikov: convergence failure: " << e.what() << '\n';
        return cli::kConvergenceFailure;
    } catch (const std::runtime_error& e) {
        std::cerr << "sitnikov: numerical failure: " << e.what() << '\n';
        return cli::kConvergenceFailure;
    }
    return cli::kSuccess;
}

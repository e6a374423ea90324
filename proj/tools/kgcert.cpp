// kgcert: exact-arithmetic certificates for symplectic splittings, twist
// invariants, and the cube-quotient pairing.  Every subcommand is a thin
// shell over one report builder in the library; all output is deterministic
// JSON (CSV for the tabular report) so runs can be diffed byte-for-byte.
//
// Exit codes:
//   0  all requested checks passed
//   1  a verification failed, or an enumeration was exhausted
//   2  usage error (bad flags or arguments)
//   3  invalid input (malformed matrix/problem, out-of-range parameters)
//   4  I/O failure

#include <CLI11.hpp>

#include "kgc/errors.hpp"
#include "kgc/reports.hpp"

#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOut {
    std::string format = "json";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, CommonOut& io, bool allow_csv) {
    std::string formats = allow_csv ? "json or csv" : "json";
    cmd->add_option("--format", io.format, "output format (" + formats + ")")
        ->default_str("json");
    cmd->add_option("--out", io.out_path, "write the report here instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for symplectic splittings and twist invariants"};
    app.require_subcommand(1);

    std::optional<kgc::RunReport> report;
    CommonOut io;

    // verify-prop22 -----------------------------------------------------
    auto* c_verify = app.add_subcommand(
        "verify-prop22", "pairing determinant check over a genus range");
    std::size_t g_min = 3, g_max = 6;
    unsigned jobs = 1;
    c_verify->add_option("--g-min", g_min, "smallest genus (>= 3)")->default_str("3");
    c_verify->add_option("--g-max", g_max, "largest genus")->default_str("6");
    c_verify->add_option("--jobs", jobs, "worker threads")->default_str("1");
    add_output_flags(c_verify, io, false);
    c_verify->callback([&] { report = kgc::run_verify_prop22(g_min, g_max, jobs); });

    // lambda-table --------------------------------------------------------
    auto* c_table = app.add_subcommand(
        "lambda-table", "twist values of one cocycle against the closed forms");
    std::size_t tg = 0, tp = 0, tq = 0;
    c_table->add_option("--g", tg, "genus (>= 3)")->required();
    c_table->add_option("--p", tp, "first handle index")->required();
    c_table->add_option("--q", tq, "second handle index (p < q <= g)")->required();
    add_output_flags(c_table, io, true);
    c_table->callback([&] { report = kgc::run_lambda_table(tg, tp, tq); });

    // fixed-subgroup ------------------------------------------------------
    auto* c_fixed = app.add_subcommand(
        "fixed-subgroup", "fixed sublattice of the cube quotient under the point stabilizer");
    std::size_t fg = 0;
    c_fixed->add_option("--g", fg, "genus (>= 3)")->required();
    add_output_flags(c_fixed, io, false);
    c_fixed->callback([&] { report = kgc::run_fixed_subgroup(fg); });

    // cosets ---------------------------------------------------------------
    auto* c_cosets = app.add_subcommand(
        "cosets", "enumerate stabilizer-coset representatives");
    std::size_t cg = 0, ccount = 0;
    c_cosets->add_option("--g", cg, "genus (>= 3)")->required();
    c_cosets->add_option("--count", ccount, "how many representatives")->required();
    add_output_flags(c_cosets, io, false);
    c_cosets->callback([&] { report = kgc::run_cosets(cg, ccount); });

    // generic-x -------------------------------------------------------------
    auto* c_generic = app.add_subcommand(
        "generic-x", "find and verify a generic vector for a splitting family");
    std::string splittings_path;
    c_generic->add_option("--splittings", splittings_path, "JSON file with the problem")
        ->required();
    add_output_flags(c_generic, io, false);
    c_generic->callback([&] { report = kgc::run_generic_x(splittings_path); });

    // det / snf / hnf -------------------------------------------------------
    std::string in_path;
    auto* c_det = app.add_subcommand("det", "exact determinant of a matrix file");
    c_det->add_option("--in", in_path, "matrix file (text or JSON)")->required();
    add_output_flags(c_det, io, false);
    c_det->callback([&] { report = kgc::run_det(in_path); });

    auto* c_snf = app.add_subcommand(
        "snf", "diagonalize a matrix file with unimodular transforms");
    c_snf->add_option("--in", in_path, "matrix file (text or JSON)")->required();
    add_output_flags(c_snf, io, false);
    c_snf->callback([&] { report = kgc::run_snf(in_path); });

    auto* c_hnf = app.add_subcommand("hnf", "canonical row basis of a matrix file");
    c_hnf->add_option("--in", in_path, "matrix file (text or JSON)")->required();
    add_output_flags(c_hnf, io, false);
    c_hnf->callback([&] { report = kgc::run_hnf(in_path); });

    // selftest ----------------------------------------------------------------
    auto* c_self = app.add_subcommand("selftest", "run the full acceptance suite");
    unsigned self_jobs = 1;
    c_self->add_option("--jobs", self_jobs, "worker threads")->default_str("1");
    add_output_flags(c_self, io, false);
    c_self->callback([&] { report = kgc::run_selftest(self_jobs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const kgc::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const kgc::exhaustion_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const kgc::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kgc::dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (!report) {
        std::cerr << "error: no subcommand ran\n";
        return 2;
    }

    try {
        kgc::emit_report(*report, io.format, io.out_path);
    } catch (const kgc::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const kgc::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return report->pass ? 0 : 1;
}

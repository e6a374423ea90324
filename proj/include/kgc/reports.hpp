#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>

namespace kgc {

// Every CLI subcommand builds one of these and emits it.  The payload is
// pure data: same inputs, same bytes.  Wall-clock time lives outside the
// payload (emit writes it to stderr as a comment line) so timing noise never
// touches the comparable output.
//
// These builders are the whole substance of the CLI: tests call them
// directly and compare against straight library calls, which keeps the
// binary a thin argument-parsing shell.
struct RunReport {
    std::string command;
    nlohmann::json payload;
    bool pass = false;
    double wall_ms = 0.0;
};

RunReport run_verify_prop22(std::size_t g_min, std::size_t g_max, unsigned jobs);
RunReport run_lambda_table(std::size_t g, std::size_t p, std::size_t q);
RunReport run_fixed_subgroup(std::size_t g);
RunReport run_cosets(std::size_t g, std::size_t count);
RunReport run_generic_x(const std::string& splittings_path);
RunReport run_det(const std::string& in_path);
RunReport run_snf(const std::string& in_path);
RunReport run_hnf(const std::string& in_path);
RunReport run_selftest(unsigned jobs);

// CSV is defined for the tabular reports (lambda-table); everything else is
// JSON only.
bool report_supports_csv(const std::string& command);
std::string report_to_csv(const RunReport& report);

// Serialize the payload (pretty JSON or CSV) to out_path or, if empty, to
// stdout; append the wall-time comment to stderr.
void emit_report(const RunReport& report, const std::string& format, const std::string& out_path);

} // namespace kgc

#pragma once

#include "kgc/int_matrix.hpp"
#include "kgc/pairing.hpp"
#include "kgc/seifert.hpp"
#include "kgc/splitting.hpp"
#include "kgc/wedge.hpp"
#include "kgc/witness.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kgc {

// JSON conventions: an Integer that fits in 64 bits is a JSON number,
// anything larger is an exact decimal string; readers accept both.  Payloads
// contain only the data named here -- no timestamps, no environment -- so a
// given computation always serializes to the same bytes.

nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const std::vector<Integer>& v);
std::vector<Integer> vector_from_json(const nlohmann::json& j);

// {"rows": r, "cols": c, "data": [[row 0...], [row 1...], ...]}
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// A splitting is its signature: the array of canonical summand bases, each
// an array of two rows.
nlohmann::json splitting_to_json(const Splitting& s);
Splitting splitting_from_json(const SymplecticContext& ctx, const nlohmann::json& j);

// {"g": g, "splittings": [splitting, ...]}
nlohmann::json witness_problem_to_json(const WitnessProblem& p);
WitnessProblem witness_problem_from_json(const nlohmann::json& j);

nlohmann::json witness_result_to_json(const WitnessResult& r);

// {"g", "section", "coords"} -- section is the hex fingerprint of the
// quotient section the coordinates were taken in.
nlohmann::json uvector_to_json(const UVector& v);
UVector uvector_from_json(const nlohmann::json& j);

nlohmann::json lambda_table_to_json(const LambdaTable& t);

nlohmann::json prop22_report_to_json(const Prop22Report& r);

// Parse a whole document, mapping parse failure to invalid_input_error.
nlohmann::json parse_json(const std::string& text, const std::string& what);

} // namespace kgc

#include "kgc/json_io.hpp"

#include "kgc/errors.hpp"

#include <cstdio>
#include <utility>

namespace kgc {

using nlohmann::json;

json integer_to_json(const Integer& v) {
    if (fits_int64(v))
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw invalid_input_error("'" + j.get<std::string>() +
                                      "' is not a decimal integer");
        }
    }
    throw invalid_input_error("expected an integer (number or decimal string), got " +
                              std::string(j.type_name()));
}

json vector_to_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const Integer& x : v)
        arr.push_back(integer_to_json(x));
    return arr;
}

std::vector<Integer> vector_from_json(const json& j) {
    if (!j.is_array())
        throw invalid_input_error("expected an array of integers");
    std::vector<Integer> v;
    v.reserve(j.size());
    for (const json& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json data = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        data.push_back(vector_to_json(m.row(r)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw invalid_input_error("matrix JSON needs 'rows', 'cols', 'data'");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows)
        throw invalid_input_error("matrix JSON: 'data' must hold " + std::to_string(rows) +
                                  " rows");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Integer> row = vector_from_json(data[r]);
        if (row.size() != cols)
            throw invalid_input_error("matrix JSON: row " + std::to_string(r) + " has " +
                                      std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(cols));
        m.set_row(r, row);
    }
    return m;
}

json splitting_to_json(const Splitting& s) {
    json arr = json::array();
    for (const IntMatrix& summand : s.summands()) {
        json rows = json::array();
        rows.push_back(vector_to_json(summand.row(0)));
        rows.push_back(vector_to_json(summand.row(1)));
        arr.push_back(std::move(rows));
    }
    return arr;
}

Splitting splitting_from_json(const SymplecticContext& ctx, const json& j) {
    if (!j.is_array() || j.size() != ctx.genus())
        throw invalid_input_error("splitting JSON must be an array of " +
                                  std::to_string(ctx.genus()) + " summands");
    std::vector<IntMatrix> bases;
    bases.reserve(j.size());
    for (const json& summand : j) {
        if (!summand.is_array() || summand.size() != 2)
            throw invalid_input_error("splitting JSON: each summand is an array of 2 rows");
        IntMatrix b(2, ctx.dim());
        for (std::size_t r = 0; r < 2; ++r) {
            std::vector<Integer> row = vector_from_json(summand[r]);
            if (row.size() != ctx.dim())
                throw invalid_input_error("splitting JSON: rows must have length " +
                                          std::to_string(ctx.dim()));
            b.set_row(r, row);
        }
        bases.push_back(std::move(b));
    }
    return Splitting(ctx, std::move(bases));
}

json witness_problem_to_json(const WitnessProblem& p) {
    json arr = json::array();
    for (const Splitting& s : p.splittings)
        arr.push_back(splitting_to_json(s));
    return json{{"g", p.g}, {"splittings", std::move(arr)}};
}

WitnessProblem witness_problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("splittings"))
        throw invalid_input_error("witness problem JSON needs 'g' and 'splittings'");
    WitnessProblem p;
    p.g = j.at("g").get<std::size_t>();
    SymplecticContext ctx(p.g);
    const json& arr = j.at("splittings");
    if (!arr.is_array() || arr.empty())
        throw invalid_input_error("witness problem JSON: 'splittings' must be a nonempty array");
    for (const json& s : arr)
        p.splittings.push_back(splitting_from_json(ctx, s));
    return p;
}

json witness_result_to_json(const WitnessResult& r) {
    json grid = json::array();
    for (const auto& row : r.grid) {
        json cells = json::array();
        for (const WitnessComponent& cell : row)
            cells.push_back(json{{"component", vector_to_json(cell.component)},
                                 {"multiplier", integer_to_json(cell.multiplier)},
                                 {"primitive", vector_to_json(cell.primitive)}});
        grid.push_back(std::move(cells));
    }
    json idx = json::array();
    for (const auto& row : r.index) {
        json cells = json::array();
        for (std::size_t v : row)
            cells.push_back(v);
        idx.push_back(std::move(cells));
    }
    return json{{"x", vector_to_json(r.x)},
                {"components", std::move(grid)},
                {"distinguishing", std::move(idx)}};
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

json uvector_to_json(const UVector& v) {
    return json{{"g", v.g}, {"section", hex64(v.fingerprint)}, {"coords", vector_to_json(v.coords)}};
}

UVector uvector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("section") || !j.contains("coords"))
        throw invalid_input_error("UVector JSON needs 'g', 'section', 'coords'");
    UVector v;
    v.g = j.at("g").get<std::size_t>();
    std::string hex = j.at("section").get<std::string>();
    v.fingerprint = std::stoull(hex, nullptr, 16);
    v.coords = vector_from_json(j.at("coords"));
    return v;
}

json lambda_table_to_json(const LambdaTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.delta.size(); ++i)
        rows.push_back(json{{"curve", "delta_" + std::to_string(i + 1)},
                            {"value", integer_to_json(t.delta[i])}});
    for (std::size_t i = 0; i < t.epsilon.size(); ++i)
        rows.push_back(json{{"curve", "epsilon_" + std::to_string(i + 2)},
                            {"value", integer_to_json(t.epsilon[i])}});
    return json{{"g", t.g}, {"p", t.p}, {"q", t.q}, {"values", std::move(rows)}};
}

json prop22_report_to_json(const Prop22Report& r) {
    return json{{"g", r.g},
                {"detC", integer_to_json(r.det_c)},
                {"pairing", integer_to_json(r.pairing)},
                {"expected", integer_to_json(r.expected)},
                {"pass", r.pass}};
}

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw invalid_input_error(what + ": malformed JSON");
    return j;
}

} // namespace kgc

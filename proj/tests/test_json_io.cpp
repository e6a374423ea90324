#include <doctest.h>

#include "kgc/errors.hpp"
#include "kgc/json_io.hpp"
#include "kgc/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace kgc;
using nlohmann::json;

TEST_CASE("integers: numbers up to 64 bits, exact strings beyond") {
    json small = integer_to_json(Integer(-42));
    CHECK(small.is_number_integer());
    CHECK(integer_from_json(small) == -42);

    Integer big = (Integer(1) << 100) + 7;
    json encoded = integer_to_json(big);
    CHECK(encoded.is_string());
    CHECK(encoded.get<std::string>() == big.str());
    CHECK(integer_from_json(encoded) == big);
    CHECK(integer_from_json(integer_to_json(-big)) == -big);

    // Readers accept both encodings.
    CHECK(integer_from_json(json::parse("123")) == 123);
    CHECK(integer_from_json(json::parse("\"123\"")) == 123);
    CHECK_THROWS_AS(integer_from_json(json::parse("1.5")), invalid_input_error);
    CHECK_THROWS_AS(integer_from_json(json::parse("\"12x\"")), invalid_input_error);
    CHECK_THROWS_AS(integer_from_json(json::parse("null")), invalid_input_error);
}

TEST_CASE("vectors and matrices roundtrip, big entries included") {
    std::vector<Integer> v{0, -3, Integer(1) << 90};
    CHECK(vector_from_json(vector_to_json(v)) == v);

    IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    m(0, 0) = -(Integer(1) << 70);
    IntMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back == m);

    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"rows\":2,\"cols\":2}")),
                    invalid_input_error);
    CHECK_THROWS_AS(matrix_from_json(json::parse(
                        "{\"rows\":2,\"cols\":2,\"data\":[[1,2],[3]]}")),
                    invalid_input_error);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[1,2,3]")), invalid_input_error);
}

TEST_CASE("splittings serialize as their canonical signature") {
    SymplecticContext ctx(3);
    Splitting moved = apply(psi_pq(ctx, 1, 2), standard_splitting(ctx));
    json j = splitting_to_json(moved);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    Splitting back = splitting_from_json(ctx, j);
    CHECK(back == moved);

    // A different generating set of the same splitting gives the same JSON.
    CHECK(splitting_to_json(back) == j);

    CHECK_THROWS_AS(splitting_from_json(ctx, json::parse("[]")), invalid_input_error);
    CHECK_THROWS_AS(splitting_from_json(ctx, json::parse("{}")), invalid_input_error);
}

TEST_CASE("witness problems and results") {
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);
    WitnessProblem p;
    p.g = 3;
    p.splittings = {w0, apply(psi_pq(ctx, 1, 2), w0)};

    json j = witness_problem_to_json(p);
    WitnessProblem back = witness_problem_from_json(j);
    CHECK(back.g == 3);
    REQUIRE(back.splittings.size() == 2);
    CHECK(back.splittings[0] == p.splittings[0]);
    CHECK(back.splittings[1] == p.splittings[1]);

    WitnessResult res = find_generic_x(ctx, p);
    json out = witness_result_to_json(res);
    CHECK(out.contains("x"));
    CHECK(out.contains("components"));
    CHECK(out.contains("distinguishing"));
    CHECK(vector_from_json(out.at("x")) == res.x);
    CHECK(out.at("components").size() == 2);
    CHECK(out.at("components")[0].size() == 3);
    CHECK(out.at("components")[0][0].contains("multiplier"));

    CHECK_THROWS_AS(witness_problem_from_json(json::parse("{\"g\":3,\"splittings\":[]}")),
                    invalid_input_error);
}

TEST_CASE("tagged quotient vectors") {
    USpace us = u_space(3);
    UVector v = make_uvector(us, std::vector<Integer>(14, 2));
    json j = uvector_to_json(v);
    CHECK(j.at("section").is_string());
    CHECK(j.at("section").get<std::string>().size() == 16);
    UVector back = uvector_from_json(j);
    CHECK(back.g == v.g);
    CHECK(back.fingerprint == v.fingerprint);
    CHECK(back.coords == v.coords);

    CHECK_THROWS_AS(uvector_from_json(json::parse("{\"g\":3}")), invalid_input_error);
}

TEST_CASE("report serializers carry exact values") {
    SymplecticContext ctx(3);
    Prop22Report rep = verify_prop22(ctx);
    json j = prop22_report_to_json(rep);
    CHECK(integer_from_json(j.at("detC")) == rep.det_c);
    CHECK(integer_from_json(j.at("pairing")) == rep.pairing);
    CHECK(j.at("pass").get<bool>() == rep.pass);

    LambdaTable t = lambda_pq_table(ctx, 1, 2);
    json tj = lambda_table_to_json(t);
    CHECK(tj.at("values").size() == 3); // 3 deltas, no epsilons at g=3
    CHECK(tj.at("values")[0].at("curve") == "delta_1");
}

TEST_CASE("whole-document parsing maps failures to input errors") {
    CHECK(parse_json("{\"a\": 1}", "doc").at("a") == 1);
    CHECK_THROWS_AS(parse_json("{broken", "doc"), invalid_input_error);
    CHECK_THROWS_AS(parse_json("", "doc"), invalid_input_error);
}

TEST_CASE("matrix files: text format, JSON format, sniffing") {
    const std::string dir = "kgc_test_io";
    std::remove((dir + "_text.txt").c_str());

    {
        std::ofstream out(dir + "_text.txt");
        out << "2 3\n1 2 3\n-4 5 -6\n";
    }
    IntMatrix m = read_matrix_file(dir + "_text.txt");
    CHECK(m == IntMatrix{{1, 2, 3}, {-4, 5, -6}});

    {
        std::ofstream out(dir + "_mat.json");
        out << matrix_to_json(m).dump();
    }
    CHECK(read_matrix_file(dir + "_mat.json") == m);

    // Text writer/reader roundtrip, including values beyond 64 bits.
    IntMatrix big{{1}};
    big(0, 0) = (Integer(1) << 80) * -3;
    {
        std::ofstream out(dir + "_big.txt");
        write_matrix_text(out, big);
    }
    CHECK(read_matrix_file(dir + "_big.txt") == big);

    {
        std::ofstream out(dir + "_bad.txt");
        out << "2 2\n1 2 3\n";
    }
    CHECK_THROWS_AS(read_matrix_file(dir + "_bad.txt"), invalid_input_error);
    CHECK_THROWS_AS(read_matrix_file("does_not_exist_anywhere.txt"), io_error);

    std::istringstream neg("1 1\nab\n");
    CHECK_THROWS_AS(read_matrix_text(neg), invalid_input_error);

    for (const char* suffix : {"_text.txt", "_mat.json", "_big.txt", "_bad.txt"})
        std::remove((dir + suffix).c_str());
}

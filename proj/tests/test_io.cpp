#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "intdecomp/io.hpp"

#include <cstdio>
#include <fstream>

#include "golden.hpp"

using namespace intdecomp;

namespace {

const char *kGoldenText = "3 5\n"
                          "# worked example\n"
                          "2 -4 2 5 -6\n"
                          "2 -2 2 5 -3\n"
                          "0 -2 1 2 -3\n";

struct TempFile {
    std::string path;

    explicit TempFile(const std::string &contents) {
        static int counter = 0;
        path = "/tmp/intdecomp_io_test_" + std::to_string(++counter) + ".txt";
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("parse_matrix_text reads the worked example") {
    CHECK(parse_matrix_text(kGoldenText) == golden::a);
}

TEST_CASE("parse_matrix_text syntax") {
    CHECK(parse_matrix_text("1 2\n+3 -4\n") == IntMatrix{{3, -4}});
    CHECK(parse_matrix_text("2 2 # dims\n1 2\n3 4") ==
          IntMatrix{{1, 2}, {3, 4}});
    CHECK(parse_matrix_text("1 1\n12345678901234567890")(0, 0) ==
          Int("12345678901234567890"));
    // Comments may touch tokens.
    CHECK(parse_matrix_text("1 1\n7#tail") == IntMatrix{{7}});
}

TEST_CASE("parse_matrix_text diagnostics") {
    try {
        parse_matrix_text("1 2\n1 2a\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()) == "malformed token '2a'");
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }

    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("2"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("-1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n5\n"), ParseError);      // too few
    CHECK_THROWS_AS(parse_matrix_text("1 2\n5 6 7\n"), ParseError);  // trailing

    try {
        parse_matrix_text("1 2\n5 6 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()) == "trailing content '7'");
    }
}

TEST_CASE("parse_matrix_json") {
    nlohmann::json doc = {{"rows", 2},
                          {"cols", 2},
                          {"entries", {{"1", "-2"}, {3, 4}}}};
    CHECK(parse_matrix_json(doc) == IntMatrix{{1, -2}, {3, 4}});

    CHECK_THROWS_AS(parse_matrix_json(nlohmann::json::array()), ParseError);
    CHECK_THROWS_AS(
        parse_matrix_json({{"rows", 1}, {"cols", 2}, {"entries", {{1}}}}),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_json({{"rows", 1}, {"cols", 1}, {"entries", {{"x"}}}}),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_json({{"rows", 1}, {"cols", 1}, {"entries", {{1.5}}}}),
        ParseError);
}

TEST_CASE("matrix json round-trips") {
    CHECK(matrix_from_json(matrix_to_json(golden::a)) == golden::a);
    IntMatrix big(1, 1);
    big(0, 0) = Int("123456789012345678901234567890");
    CHECK(matrix_from_json(matrix_to_json(big)) == big);
}

TEST_CASE("load_matrix_document") {
    TempFile plain(kGoldenText);
    MatrixDocument doc = load_matrix_document(plain.path);
    CHECK(doc.matrix == golden::a);
    CHECK(doc.format == MatrixDocument::Format::plain_text);
    CHECK(doc.source == plain.path);

    TempFile structured(matrix_to_json(golden::a).dump());
    MatrixDocument jdoc = load_matrix_document(structured.path);
    CHECK(jdoc.matrix == golden::a);
    CHECK(jdoc.format == MatrixDocument::Format::structured);

    CHECK_THROWS_AS(load_matrix_document("/nonexistent/path/matrix.txt"),
                    IoError);

    TempFile broken("{\"rows\": 1");
    CHECK_THROWS_AS(load_matrix_document(broken.path), ParseError);
}

TEST_CASE("format_matrix aligns columns") {
    CHECK(format_matrix(IntMatrix{{1, -20}, {300, 4}}) ==
          "  1 -20\n300   4\n");
    CHECK(format_matrix(RatMatrix(IntMatrix{{1}, {2}})) == "1\n2\n");
    RatMatrix halves(IntMatrix{{1, 2}});
    halves(0, 0) = Rat(-1, 2);
    CHECK(format_matrix(halves) == "-1/2    2\n");
}

TEST_CASE("format_partition") {
    CHECK(format_partition(golden::components) == "{1,3,4} {2,5}");
    CHECK(format_partition(ComponentPartition{{{1}}}) == "{1}");
}

TEST_CASE("hnf report carries 1-based pivots") {
    HnfResult r = hermite_normal_form(golden::a);
    nlohmann::json doc = hnf_to_json(r);
    CHECK(doc["rank"] == 3);
    CHECK(doc["pivot_cols"] == nlohmann::json({1, 2, 3}));
    CHECK(matrix_from_json(doc["H"]) == golden::h);
    CHECK(matrix_from_json(doc["P"]) == golden::p);
    CHECK(matrix_from_json(doc["P_inverse"]) == golden::p_inverse);
}

TEST_CASE("decomposition report round-trips and re-verifies") {
    Decomposition d = hnf_decomposition(golden::a);
    HnfResult r = hermite_normal_form(golden::a);
    nlohmann::json checks{{"verified", true}};
    nlohmann::json doc = decomposition_to_json(d, r.rank, r.pivot_cols, checks);

    CHECK(doc["decomposable"] == true);
    CHECK(doc["rank"] == 3);
    CHECK(doc["pivot_cols"] == nlohmann::json({1, 2, 3}));
    CHECK(doc["Q_vector"] == nlohmann::json(golden::q_one_based));
    CHECK(doc["column_partition"] == nlohmann::json({{1, 3, 4}, {2, 5}}));
    CHECK(doc["row_partition"] == nlohmann::json({{1, 3}, {2}}));
    CHECK(doc["checks"]["verified"] == true);

    // Reparse from the serialized text and re-run the verifier against A.
    nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
    Decomposition rebuilt = decomposition_from_json(reparsed);
    CHECK_FALSE(rebuilt.connectivity.has_value());
    CHECK(rebuilt.blocks.size() == 2);
    CHECK(rebuilt.blocks[0] == golden::block1);
    CHECK(rebuilt.blocks[1] == golden::block2);
    VerificationReport report = verify_decomposition(golden::a, rebuilt);
    CHECK(report.ok);
}

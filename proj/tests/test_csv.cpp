#include <doctest.h>

#include "oulad/csv.hpp"
#include "oulad/errors.hpp"

using oulad::CsvTable;
using oulad::read_csv_text;

TEST_CASE("plain rows parse into header and fields") {
    auto t = read_csv_text("a,b,c\n1,2,3\n4,5,6\n", "t.csv");
    CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"1", "2", "3"});
    CHECK(t.rows[1] == std::vector<std::string>{"4", "5", "6"});
}

TEST_CASE("quoted fields keep commas, escaped quotes, and newlines") {
    auto t = read_csv_text("x,y\n\"a,b\",\"she said \"\"hi\"\"\"\n\"line1\nline2\",z\n", "t.csv");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "a,b");
    CHECK(t.rows[0][1] == "she said \"hi\"");
    CHECK(t.rows[1][0] == "line1\nline2");
}

TEST_CASE("CRLF, missing final newline, and a BOM are tolerated") {
    auto t = read_csv_text("\xEF\xBB\xBFid,v\r\n1,2\r\n3,4", "t.csv");
    CHECK(t.header[0] == "id");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1] == std::vector<std::string>{"3", "4"});
}

TEST_CASE("empty trailing field is preserved") {
    auto t = read_csv_text("a,b\n1,\n", "t.csv");
    CHECK(t.rows[0] == std::vector<std::string>{"1", ""});
}

TEST_CASE("width mismatch reports file and line") {
    try {
        read_csv_text("a,b\n1,2,3\n", "bad.csv");
        FAIL("expected ParseError");
    } catch (const oulad::ParseError& e) {
        CHECK(e.file() == "bad.csv");
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("bad.csv") != std::string::npos);
    }
}

TEST_CASE("stray quote inside an unquoted field is rejected") {
    CHECK_THROWS_AS(read_csv_text("a,b\n1,2\"3\n", "t.csv"), oulad::ParseError);
}

TEST_CASE("unterminated quoted field is rejected") {
    CHECK_THROWS_AS(read_csv_text("a,b\n\"open,2\n", "t.csv"), oulad::ParseError);
}

TEST_CASE("empty input is rejected for lack of a header") {
    CHECK_THROWS_AS(read_csv_text("", "t.csv"), oulad::ParseError);
}

TEST_CASE("column lookups") {
    auto t = read_csv_text("id,score\n1,2\n", "t.csv");
    CHECK(t.column("score") == 1);
    CHECK(t.column("absent") == -1);
    CHECK(t.require_column("id") == 0);
    CHECK_THROWS_AS(t.require_column("absent"), oulad::ParseError);
}

TEST_CASE("escaping round-trips through the parser") {
    std::vector<std::string> fields{"plain", "a,b", "with \"quotes\"", "two\nlines", ""};
    std::string line;
    oulad::write_csv_line(line, fields);
    auto t = read_csv_text("h1,h2,h3,h4,h5\n" + line, "t.csv");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0] == fields);
}

TEST_CASE("write_csv_file and read_csv_file round-trip") {
    auto path = std::filesystem::temp_directory_path() / "oulad_csv_roundtrip.csv";
    std::vector<std::vector<std::string>> rows{{"1", "x,y"}, {"2", ""}};
    oulad::write_csv_file(path, {"id", "text"}, rows);
    auto t = oulad::read_csv_file(path);
    CHECK(t.name == "oulad_csv_roundtrip.csv");
    CHECK(t.header == std::vector<std::string>{"id", "text"});
    CHECK(t.rows == rows);
    std::filesystem::remove(path);
}

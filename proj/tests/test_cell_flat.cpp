#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oulad/errors.hpp"
#include "oulad/flat.hpp"

using namespace oulad;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FlatTable small_table() {
    FlatTable t;
    t.columns = {"id", "score", "label"};
    t.rows = {{Cell::integer(1), Cell::real(84.5), Cell::text("Pass")},
              {Cell::integer(2), Cell::missing(), Cell::text("a,b")}};
    return t;
}

}  // namespace

TEST_CASE("doubles render in shortest round-trip form") {
    CHECK(format_double(12.0) == "12");
    CHECK(format_double(84.5) == "84.5");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("cells render to CSV fields") {
    CHECK(Cell::missing().to_field() == "");
    CHECK(Cell::integer(-7).to_field() == "-7");
    CHECK(Cell::real(56.3).to_field() == "56.3");
    CHECK(Cell::text("hi").to_field() == "hi");
}

TEST_CASE("flat CSV writes header plus typed fields") {
    auto path = std::filesystem::temp_directory_path() / "oulad_flat.csv";
    write_flat_csv(small_table(), path);
    CHECK(slurp(path) == "id,score,label\n1,84.5,Pass\n2,,\"a,b\"\n");
    std::filesystem::remove(path);
}

TEST_CASE("flat CSV read restores types: missing, integer, real, text") {
    auto path = std::filesystem::temp_directory_path() / "oulad_flat_rt.csv";
    write_flat_csv(small_table(), path);
    auto t = read_flat_csv(path);
    CHECK(t == small_table());
    std::filesystem::remove(path);
}

TEST_CASE("jsonl renders one object per row with null for missing") {
    auto path = std::filesystem::temp_directory_path() / "oulad_flat.jsonl";
    write_flat_jsonl(small_table(), path);
    CHECK(slurp(path) ==
          "{\"id\":1,\"score\":84.5,\"label\":\"Pass\"}\n"
          "{\"id\":2,\"score\":null,\"label\":\"a,b\"}\n");
    std::filesystem::remove(path);
}

TEST_CASE("column lookup on flat tables") {
    auto t = small_table();
    CHECK(t.column("score") == 1);
    CHECK(t.column("absent") == -1);
    CHECK_THROWS_AS(t.require_column("absent"), SpecError);
}

TEST_CASE("numeric-looking text survives a round trip as numbers") {
    FlatTable t;
    t.columns = {"v"};
    t.rows = {{Cell::integer(10)}, {Cell::real(2.5)}, {Cell::text("x10")}};
    auto path = std::filesystem::temp_directory_path() / "oulad_flat_nums.csv";
    write_flat_csv(t, path);
    auto back = read_flat_csv(path);
    CHECK(back.rows[0][0].is_integer());
    CHECK(back.rows[1][0].is_real());
    CHECK(back.rows[2][0].is_text());
    std::filesystem::remove(path);
}

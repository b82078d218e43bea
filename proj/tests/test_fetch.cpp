#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oulad/errors.hpp"
#include "oulad/fetch.hpp"
#include "oulad/ingest.hpp"
#include "oulad/zip.hpp"

using namespace oulad;
namespace fs = std::filesystem;

namespace {

std::vector<unsigned char> bytes_of(const std::string& s) {
    return std::vector<unsigned char>(s.begin(), s.end());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A zip holding the seven tables (tiny but well-formed CSV texts), some
// nested under a directory as the real OULAD archive is.
std::vector<unsigned char> sample_archive() {
    auto dir = fs::temp_directory_path() / "oulad_fetch_src";
    fs::create_directories(dir);
    write_oulad(load_sample(), dir);
    std::vector<ZipEntry> entries;
    entries.push_back({"dataset/", {}});
    for (const auto& name : oulad_file_names())
        entries.push_back({"dataset/" + name, bytes_of(slurp(dir / name))});
    fs::remove_all(dir);
    return write_zip(entries);
}

struct CountingFetcher {
    std::vector<unsigned char> payload;
    int calls = 0;
    Fetcher make() {
        return [this](const std::string&) {
            ++calls;
            return payload;
        };
    }
};

}  // namespace

TEST_CASE("zip round-trip: stored entries read back byte for byte") {
    std::vector<ZipEntry> entries{{"a.txt", bytes_of("hello")},
                                  {"sub/b.txt", bytes_of("world\nwide")}};
    auto back = read_zip(write_zip(entries));
    REQUIRE(back.size() == 2);
    CHECK(back[0].name == "a.txt");
    CHECK(back[0].data == bytes_of("hello"));
    CHECK(back[1].data == bytes_of("world\nwide"));
}

TEST_CASE("corrupt archives are rejected") {
    CHECK_THROWS_AS(read_zip(bytes_of("not a zip at all")), AcquisitionError);
    auto zip = write_zip({{"a.txt", bytes_of("hello")}});
    zip[zip.size() / 2] ^= 0xFF;  // flip a byte somewhere in the middle
    CHECK_THROWS_AS(read_zip(zip), AcquisitionError);
}

TEST_CASE("fetch_archive unpacks the seven tables and writes a cache manifest") {
    auto dest = fs::temp_directory_path() / "oulad_fetch_dest";
    fs::remove_all(dest);

    CountingFetcher counter{sample_archive()};
    auto dir = fetch_archive("http://example.test/oulad.zip", dest, counter.make());
    CHECK(dir == dest);
    CHECK(counter.calls == 1);
    for (const auto& name : oulad_file_names()) CHECK(fs::exists(dest / name));
    CHECK(fs::exists(dest / "oulad.manifest.json"));

    auto raw = load_oulad(dest);
    CHECK(raw.student_vle.size() == 5000);
    fs::remove_all(dest);
}

TEST_CASE("a fresh cache short-circuits the download") {
    auto dest = fs::temp_directory_path() / "oulad_fetch_cache";
    fs::remove_all(dest);

    CountingFetcher counter{sample_archive()};
    fetch_archive("http://example.test/oulad.zip", dest, counter.make());
    fetch_archive("http://example.test/oulad.zip", dest, counter.make());
    CHECK(counter.calls == 1);

    // tampering with a file invalidates the cache and triggers a refetch
    std::ofstream(dest / "courses.csv", std::ios::app) << "ZZZ,2099X,100\n";
    fetch_archive("http://example.test/oulad.zip", dest, counter.make());
    CHECK(counter.calls == 2);
    auto raw = load_oulad(dest);
    CHECK(raw.courses.size() == 1);  // tampered row gone after refetch
    fs::remove_all(dest);
}

TEST_CASE("an archive missing a table names it") {
    auto dest = fs::temp_directory_path() / "oulad_fetch_incomplete";
    fs::remove_all(dest);
    std::vector<ZipEntry> entries;
    for (const auto& name : oulad_file_names())
        if (name != "studentVle.csv") entries.push_back({name, bytes_of("h\n")});
    CountingFetcher counter{write_zip(entries)};
    CHECK_THROWS_WITH_AS(fetch_archive("http://example.test/bad.zip", dest, counter.make()),
                         doctest::Contains("studentVle.csv"), AcquisitionError);
    fs::remove_all(dest);
}

TEST_CASE("transport failures surface as retriable acquisition errors") {
    auto dest = fs::temp_directory_path() / "oulad_fetch_fail";
    fs::remove_all(dest);
    Fetcher failing = [](const std::string&) -> std::vector<unsigned char> {
        throw AcquisitionError("download failed (retriable): connection refused");
    };
    CHECK_THROWS_WITH_AS(fetch_archive("http://example.test/x.zip", dest, failing),
                         doctest::Contains("retriable"), AcquisitionError);
    fs::remove_all(dest);
}

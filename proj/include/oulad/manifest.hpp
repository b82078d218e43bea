#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace oulad {

std::string sha256_hex(const unsigned char* data, std::size_t size);
std::string sha256_hex(const std::string& text);
std::string sha256_file(const std::filesystem::path& path);

// Serializes to a temporary file in the target directory, then renames into
// place, so readers never observe a partial manifest.
void write_json_atomic(const nlohmann::ordered_json& value, const std::filesystem::path& path);

struct FileDigest {
    std::string name;
    std::uintmax_t size = 0;
    std::string sha256;
};

// Cache manifest written next to fetched data (oulad.manifest.json).
struct CacheManifest {
    std::vector<FileDigest> files;
};

void write_cache_manifest(const CacheManifest& manifest, const std::filesystem::path& dir);
// Missing or unreadable manifest -> empty result.
CacheManifest read_cache_manifest(const std::filesystem::path& dir);

// True when every listed file exists under dir with matching size and hash.
bool cache_is_fresh(const CacheManifest& manifest, const std::filesystem::path& dir);

// Reproducibility sidecar written by every CLI run.
struct RunManifest {
    std::string tool_version;
    std::string subcommand;
    nlohmann::ordered_json resolved_spec;  // flags and policies as run
    std::vector<FileDigest> inputs;
    nlohmann::ordered_json effective_window;  // null when not applicable
    std::vector<FileDigest> outputs;
    std::int64_t duration_ms = 0;
};

void write_run_manifest(const RunManifest& manifest, const std::filesystem::path& dir);

}  // namespace oulad

#include "oulad/manifest.hpp"

#include <fstream>

#include <openssl/evp.h>

#include "oulad/errors.hpp"

namespace oulad {
namespace {

std::string to_hex(const unsigned char* digest, unsigned int len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

}  // namespace

std::string sha256_hex(const unsigned char* data, std::size_t size) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data, size, digest, &len, EVP_sha256(), nullptr))
        throw Error("sha256 computation failed");
    return to_hex(digest, len);
}

std::string sha256_hex(const std::string& text) {
    return sha256_hex(reinterpret_cast<const unsigned char*>(text.data()), text.size());
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AcquisitionError("cannot open file: " + path.string());

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || !EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr)) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256 initialization failed");
    }
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        const auto got = in.gcount();
        if (got > 0 && !EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got))) {
            EVP_MD_CTX_free(ctx);
            throw Error("sha256 update failed");
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    const bool ok = EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    if (!ok) throw Error("sha256 finalization failed");
    return to_hex(digest, len);
}

void write_json_atomic(const nlohmann::ordered_json& value, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw AcquisitionError("cannot write file: " + tmp.string());
        out << value.dump(2) << '\n';
        if (!out) throw AcquisitionError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_cache_manifest(const CacheManifest& manifest, const std::filesystem::path& dir) {
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& f : manifest.files)
        files.push_back({{"name", f.name}, {"size", f.size}, {"sha256", f.sha256}});
    write_json_atomic({{"files", files}}, dir / "oulad.manifest.json");
}

CacheManifest read_cache_manifest(const std::filesystem::path& dir) {
    CacheManifest manifest;
    std::ifstream in(dir / "oulad.manifest.json", std::ios::binary);
    if (!in) return manifest;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("files") || !doc["files"].is_array())
        return manifest;
    for (const auto& f : doc["files"]) {
        if (!f.contains("name") || !f.contains("size") || !f.contains("sha256")) continue;
        manifest.files.push_back(
            {f["name"].get<std::string>(), f["size"].get<std::uintmax_t>(),
             f["sha256"].get<std::string>()});
    }
    return manifest;
}

bool cache_is_fresh(const CacheManifest& manifest, const std::filesystem::path& dir) {
    if (manifest.files.empty()) return false;
    for (const auto& f : manifest.files) {
        auto path = dir / f.name;
        std::error_code ec;
        if (!std::filesystem::is_regular_file(path, ec)) return false;
        if (std::filesystem::file_size(path, ec) != f.size || ec) return false;
        if (sha256_file(path) != f.sha256) return false;
    }
    return true;
}

void write_run_manifest(const RunManifest& manifest, const std::filesystem::path& dir) {
    auto digests = [](const std::vector<FileDigest>& files) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& f : files)
            out.push_back({{"name", f.name}, {"size", f.size}, {"sha256", f.sha256}});
        return out;
    };
    nlohmann::ordered_json doc{
        {"tool_version", manifest.tool_version},
        {"subcommand", manifest.subcommand},
        {"resolved_spec", manifest.resolved_spec},
        {"inputs", digests(manifest.inputs)},
        {"effective_window", manifest.effective_window},
        {"outputs", digests(manifest.outputs)},
        {"duration_ms", manifest.duration_ms},
    };
    write_json_atomic(doc, dir / "run.manifest.json");
}

}  // namespace oulad

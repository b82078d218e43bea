#include "oulad/fetch.hpp"

#include <fstream>
#include <map>

#include <curl/curl.h>

#include "oulad/errors.hpp"
#include "oulad/ingest.hpp"
#include "oulad/manifest.hpp"
#include "oulad/zip.hpp"

namespace oulad {
namespace {

std::size_t append_body(char* data, std::size_t size, std::size_t nmemb, void* userdata) {
    auto* body = static_cast<std::vector<unsigned char>*>(userdata);
    body->insert(body->end(), reinterpret_cast<unsigned char*>(data),
                 reinterpret_cast<unsigned char*>(data) + size * nmemb);
    return size * nmemb;
}

std::string base_name(const std::string& entry_name) {
    auto slash = entry_name.find_last_of('/');
    return slash == std::string::npos ? entry_name : entry_name.substr(slash + 1);
}

}  // namespace

Fetcher default_fetcher() {
    return [](const std::string& url) {
        CURL* curl = curl_easy_init();
        if (!curl) throw AcquisitionError("could not initialize curl");

        std::vector<unsigned char> body;
        char error_buf[CURL_ERROR_SIZE] = {0};
        curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
        curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
        curl_easy_setopt(curl, CURLOPT_MAXREDIRS, 10L);
        curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
        curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 30L);
        curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append_body);
        curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
        curl_easy_setopt(curl, CURLOPT_ERRORBUFFER, error_buf);
        curl_easy_setopt(curl, CURLOPT_USERAGENT, "oulad-forge/0.1");

        const CURLcode rc = curl_easy_perform(curl);
        long status = 0;
        curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
        curl_easy_cleanup(curl);

        if (rc != CURLE_OK) {
            std::string detail = error_buf[0] ? error_buf : curl_easy_strerror(rc);
            throw AcquisitionError("download failed (retriable): " + url + ": " + detail);
        }
        if (status >= 400)
            throw AcquisitionError("download failed: " + url + ": HTTP " +
                                   std::to_string(status));
        return body;
    };
}

std::filesystem::path fetch_archive(const std::string& url, const std::filesystem::path& dest,
                                    const Fetcher& fetch) {
    std::filesystem::create_directories(dest);
    if (cache_is_fresh(read_cache_manifest(dest), dest)) return dest;

    const std::vector<unsigned char> bytes = fetch(url);
    auto entries = read_zip(bytes);

    std::map<std::string, const ZipEntry*> by_base;
    for (const auto& entry : entries) by_base.emplace(base_name(entry.name), &entry);

    CacheManifest manifest;
    for (const auto& name : oulad_file_names()) {
        auto it = by_base.find(name);
        if (it == by_base.end())
            throw AcquisitionError("archive is missing " + name);
        const auto path = dest / name;
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw AcquisitionError("cannot write file: " + path.string());
            out.write(reinterpret_cast<const char*>(it->second->data.data()),
                      static_cast<std::streamsize>(it->second->data.size()));
            if (!out) throw AcquisitionError("write failed: " + path.string());
        }
        manifest.files.push_back({name, it->second->data.size(),
                                  sha256_hex(it->second->data.data(), it->second->data.size())});
    }
    write_cache_manifest(manifest, dest);
    return dest;
}

}  // namespace oulad

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace oulad {

// Downloads a URL into memory. Injectable so tests can run without network.
using Fetcher = std::function<std::vector<unsigned char>(const std::string& url)>;

// libcurl-backed fetcher following redirects; HTTP errors and transport
// failures raise AcquisitionError (transport failures marked retriable in
// the message).
Fetcher default_fetcher();

// Ensures dest holds the seven OULAD CSVs. When a cache manifest in dest
// still matches the files on disk, returns immediately without fetching.
// Otherwise downloads the archive, unpacks the seven files (matched by base
// name anywhere in the archive), writes the cache manifest, and returns
// dest. A missing table in the archive -> AcquisitionError naming it.
std::filesystem::path fetch_archive(const std::string& url, const std::filesystem::path& dest,
                                    const Fetcher& fetch = default_fetcher());

}  // namespace oulad

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oulad {

struct ZipEntry {
    std::string name;
    std::vector<unsigned char> data;
};

// Parses a ZIP archive held in memory (stored and deflate entries, the only
// methods the OULAD distribution uses). Directory entries are skipped. CRCs
// are verified. Malformed archive -> AcquisitionError.
std::vector<ZipEntry> read_zip(const std::vector<unsigned char>& bytes);

// Minimal writer for tests and fixtures: stored (uncompressed) entries only.
std::vector<unsigned char> write_zip(const std::vector<ZipEntry>& entries);

}  // namespace oulad

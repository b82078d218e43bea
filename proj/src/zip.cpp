#include "oulad/zip.hpp"

#include <cstring>

#include <zlib.h>

#include "oulad/errors.hpp"

namespace oulad {
namespace {

constexpr std::uint32_t kEocdSignature = 0x06054b50;
constexpr std::uint32_t kCentralSignature = 0x02014b50;
constexpr std::uint32_t kLocalSignature = 0x04034b50;

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u16(std::vector<unsigned char>& out, std::uint16_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

void write_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

std::vector<unsigned char> inflate_raw(const unsigned char* data, std::size_t size,
                                       std::size_t expected) {
    std::vector<unsigned char> out(expected);
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
        throw AcquisitionError("zlib initialization failed");
    zs.next_in = const_cast<unsigned char*>(data);
    zs.avail_in = static_cast<uInt>(size);
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || zs.total_out != expected)
        throw AcquisitionError("corrupt deflate stream in archive");
    return out;
}

}  // namespace

std::vector<ZipEntry> read_zip(const std::vector<unsigned char>& bytes) {
    if (bytes.size() < 22) throw AcquisitionError("archive too small to be a zip file");

    // End-of-central-directory record: scan backwards over a possible comment.
    std::size_t eocd = std::string::npos;
    const std::size_t scan_limit = bytes.size() > 22 + 65535 ? bytes.size() - 22 - 65535 : 0;
    for (std::size_t i = bytes.size() - 22 + 1; i-- > scan_limit;) {
        if (read_u32(&bytes[i]) == kEocdSignature) {
            eocd = i;
            break;
        }
    }
    if (eocd == std::string::npos) throw AcquisitionError("zip end-of-directory record not found");

    const std::uint16_t n_entries = read_u16(&bytes[eocd + 10]);
    const std::uint32_t dir_offset = read_u32(&bytes[eocd + 16]);
    if (dir_offset > bytes.size()) throw AcquisitionError("zip central directory out of range");

    std::vector<ZipEntry> entries;
    std::size_t pos = dir_offset;
    for (std::uint16_t e = 0; e < n_entries; ++e) {
        if (pos + 46 > bytes.size() || read_u32(&bytes[pos]) != kCentralSignature)
            throw AcquisitionError("corrupt zip central directory");
        const std::uint16_t method = read_u16(&bytes[pos + 10]);
        const std::uint32_t crc = read_u32(&bytes[pos + 16]);
        const std::uint32_t compressed = read_u32(&bytes[pos + 20]);
        const std::uint32_t uncompressed = read_u32(&bytes[pos + 24]);
        const std::uint16_t name_len = read_u16(&bytes[pos + 28]);
        const std::uint16_t extra_len = read_u16(&bytes[pos + 30]);
        const std::uint16_t comment_len = read_u16(&bytes[pos + 32]);
        const std::uint32_t local_offset = read_u32(&bytes[pos + 42]);
        if (pos + 46 + name_len > bytes.size())
            throw AcquisitionError("corrupt zip central directory");
        std::string name(reinterpret_cast<const char*>(&bytes[pos + 46]), name_len);
        pos += 46u + name_len + extra_len + comment_len;

        if (!name.empty() && name.back() == '/') continue;  // directory entry

        if (local_offset + 30 > bytes.size() || read_u32(&bytes[local_offset]) != kLocalSignature)
            throw AcquisitionError("corrupt zip local header for " + name);
        const std::uint16_t local_name_len = read_u16(&bytes[local_offset + 26]);
        const std::uint16_t local_extra_len = read_u16(&bytes[local_offset + 28]);
        const std::size_t data_start = local_offset + 30u + local_name_len + local_extra_len;
        if (data_start + compressed > bytes.size())
            throw AcquisitionError("zip entry data out of range for " + name);

        ZipEntry entry;
        entry.name = std::move(name);
        if (method == 0) {
            if (compressed != uncompressed)
                throw AcquisitionError("stored zip entry with mismatched sizes: " + entry.name);
            entry.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(data_start),
                              bytes.begin() + static_cast<std::ptrdiff_t>(data_start + compressed));
        } else if (method == 8) {
            entry.data = inflate_raw(&bytes[data_start], compressed, uncompressed);
        } else {
            throw AcquisitionError("unsupported zip compression method " +
                                   std::to_string(method) + " for " + entry.name);
        }

        const auto actual_crc = static_cast<std::uint32_t>(
            crc32(0, entry.data.data(), static_cast<uInt>(entry.data.size())));
        if (actual_crc != crc)
            throw AcquisitionError("crc mismatch for zip entry " + entry.name);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<unsigned char> write_zip(const std::vector<ZipEntry>& entries) {
    std::vector<unsigned char> out;
    struct Central {
        std::string name;
        std::uint32_t crc;
        std::uint32_t size;
        std::uint32_t offset;
    };
    std::vector<Central> centrals;

    for (const auto& entry : entries) {
        const auto offset = static_cast<std::uint32_t>(out.size());
        const auto crc = static_cast<std::uint32_t>(
            crc32(0, entry.data.data(), static_cast<uInt>(entry.data.size())));
        const auto size = static_cast<std::uint32_t>(entry.data.size());

        write_u32(out, kLocalSignature);
        write_u16(out, 20);  // version needed
        write_u16(out, 0);   // flags
        write_u16(out, 0);   // method: stored
        write_u16(out, 0);   // mod time
        write_u16(out, 0);   // mod date
        write_u32(out, crc);
        write_u32(out, size);
        write_u32(out, size);
        write_u16(out, static_cast<std::uint16_t>(entry.name.size()));
        write_u16(out, 0);  // extra
        out.insert(out.end(), entry.name.begin(), entry.name.end());
        out.insert(out.end(), entry.data.begin(), entry.data.end());

        centrals.push_back({entry.name, crc, size, offset});
    }

    const auto dir_offset = static_cast<std::uint32_t>(out.size());
    for (const auto& c : centrals) {
        write_u32(out, kCentralSignature);
        write_u16(out, 20);  // version made by
        write_u16(out, 20);  // version needed
        write_u16(out, 0);
        write_u16(out, 0);
        write_u16(out, 0);
        write_u16(out, 0);
        write_u32(out, c.crc);
        write_u32(out, c.size);
        write_u32(out, c.size);
        write_u16(out, static_cast<std::uint16_t>(c.name.size()));
        write_u16(out, 0);
        write_u16(out, 0);
        write_u16(out, 0);
        write_u16(out, 0);
        write_u32(out, 0);
        write_u32(out, c.offset);
        out.insert(out.end(), c.name.begin(), c.name.end());
    }
    const auto dir_size = static_cast<std::uint32_t>(out.size()) - dir_offset;

    write_u32(out, kEocdSignature);
    write_u16(out, 0);
    write_u16(out, 0);
    write_u16(out, static_cast<std::uint16_t>(centrals.size()));
    write_u16(out, static_cast<std::uint16_t>(centrals.size()));
    write_u32(out, dir_size);
    write_u32(out, dir_offset);
    write_u16(out, 0);
    return out;
}

}  // namespace oulad

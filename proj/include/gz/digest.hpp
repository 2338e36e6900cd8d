#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

namespace gz {

/// FNV-1a 64-bit over a byte string, hex-encoded. Used for content digests of
/// matrices and patterns in reports (identification, not cryptography).
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace gz

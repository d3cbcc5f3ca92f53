#pragma once

#include <string>
#include <string_view>

namespace vmg {

// Hex-encoded SHA-256 digest of a byte string.
std::string sha256_hex(std::string_view data);

// Streaming variant for hashing large files without loading them whole.
std::string sha256_file_hex(const std::string& path);

}  // namespace vmg

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fusegrey {

using Bytes = std::vector<uint8_t>;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
  return std::string(b.begin(), b.end());
}

std::string hex_encode(const Bytes& b);
Bytes hex_decode(std::string_view s);

// FNV-1a. Used for coverage signatures and target content hashes; not
// cryptographic.
uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

// Renders bytes with printable ASCII kept and the rest as \xNN, for messages.
std::string printable(const Bytes& b, size_t max_len = 64);

}  // namespace fusegrey

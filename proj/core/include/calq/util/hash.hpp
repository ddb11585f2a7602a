#ifndef CALQ_UTIL_HASH_HPP
#define CALQ_UTIL_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace calq::util {

/// FNV-1a 64-bit content hash, used for manifests and field sidecars.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data);
std::string fnv1a64_file_hex(const std::string& path);

}  // namespace calq::util

#endif

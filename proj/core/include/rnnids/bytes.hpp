#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rnnids {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }
inline std::string to_string(ByteView b) { return std::string(b.begin(), b.end()); }

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);
void write_file(const std::filesystem::path& path, std::string_view text);

std::string base64_encode(ByteView data);
// Throws std::invalid_argument on malformed input.
Bytes base64_decode(std::string_view text);

std::string to_hex(ByteView data);
// Throws std::invalid_argument on odd length or non-hex digits.
Bytes from_hex(std::string_view text);

}  // namespace rnnids

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cfht {

// Locale-independent float formatting. sig_digits=17 round-trips doubles
// bit-exactly; 9 is the report precision.
std::string format_double(double v, int sig_digits = 17);

// Locale-independent parsing; throws ParseError on trailing garbage.
double parse_double(std::string_view text);
long long parse_int(std::string_view text);
std::uint64_t parse_hex_u64(std::string_view text);
std::string to_hex_u64(std::uint64_t v);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cfht

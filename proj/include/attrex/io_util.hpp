#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attrex/tensor.hpp"

namespace attrex {

// Little-endian float32 blob encoding shared by the model, dataset and
// attribution archive formats.
void append_f32_le(std::string& out, const std::vector<double>& values);
std::vector<double> read_f32_le(const std::string& blob, std::size_t offset,
                                std::size_t count);

std::uint64_t fnv1a64(const void* bytes, std::size_t length);
std::string checksum_hex(const std::string& blob);

std::string read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const std::string& contents);
bool file_exists(const std::string& path);
void ensure_directory(const std::string& path);

// Fixed-format float for text outputs that must be byte-reproducible.
std::string format_double(double value);

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };
// Level comes from ATTREX_LOG (error|warn|info|debug), default warn.
void log_message(LogLevel level, const std::string& message);

}  // namespace attrex

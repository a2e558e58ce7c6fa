#include "attrex/io_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

namespace attrex {

void append_f32_le(std::string& out, const std::vector<double>& values) {
  out.reserve(out.size() + values.size() * 4);
  for (double v : values) {
    float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    out.push_back(static_cast<char>(bits & 0xFF));
    out.push_back(static_cast<char>((bits >> 8) & 0xFF));
    out.push_back(static_cast<char>((bits >> 16) & 0xFF));
    out.push_back(static_cast<char>((bits >> 24) & 0xFF));
  }
}

std::vector<double> read_f32_le(const std::string& blob, std::size_t offset,
                                std::size_t count) {
  if (offset + count * 4 > blob.size()) {
    fail(ErrorCode::kCorruptFile, "float blob shorter than expected");
  }
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned char* p =
        reinterpret_cast<const unsigned char*>(blob.data() + offset + i * 4);
    std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                         (static_cast<std::uint32_t>(p[1]) << 8) |
                         (static_cast<std::uint32_t>(p[2]) << 16) |
                         (static_cast<std::uint32_t>(p[3]) << 24);
    float f;
    std::memcpy(&f, &bits, 4);
    out[i] = static_cast<double>(f);
  }
  return out;
}

std::uint64_t fnv1a64(const void* bytes, std::size_t length) {
  const unsigned char* p = static_cast<const unsigned char*>(bytes);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < length; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string checksum_hex(const std::string& blob) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(blob.data(), blob.size())));
  return std::string(buf);
}

std::string read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoFailure, "cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_binary_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIoFailure, "cannot open for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(ErrorCode::kIoFailure, "write failed: " + path);
}

bool file_exists(const std::string& path) {
  return std::filesystem::exists(path);
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) fail(ErrorCode::kIoFailure, "cannot create directory: " + path);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

namespace {

LogLevel configured_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("ATTREX_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    std::string s(env);
    if (s == "error") return LogLevel::kError;
    if (s == "info") return LogLevel::kInfo;
    if (s == "debug") return LogLevel::kDebug;
    return LogLevel::kWarn;
  }();
  return level;
}

}  // namespace

void log_message(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(configured_level())) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const char* tag = level == LogLevel::kError  ? "error"
                    : level == LogLevel::kWarn ? "warn"
                    : level == LogLevel::kInfo ? "info"
                                               : "debug";
  std::cerr << "[attrex:" << tag << "] " << message << "\n";
}

}  // namespace attrex

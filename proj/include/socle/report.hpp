#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/error.hpp"

namespace socle {

// FNV-1a over raw bytes; stable fingerprint for report reproducibility.
std::uint64_t fnv1a(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

// One command result. The machine block is line-oriented key<TAB>value
// with deterministic (insertion) order; the human block is a plain
// indented rendering of the same records. Nothing non-deterministic
// (no times, no pointers) ever enters a report.
class Report {
 public:
  explicit Report(std::string command_echo);

  void add_input(const std::string& path, std::string_view content);
  void add(const std::string& key, const std::string& value);
  void set_error(ErrorCode code, const std::string& message);
  void set_error_io(const std::string& message);  // distinct exit class

  bool ok() const { return ok_; }
  int exit_code() const;

  std::string machine() const;
  std::string human() const;

 private:
  std::string status_line() const;

  std::string command_;
  std::vector<std::pair<std::string, std::string>> records_;
  bool ok_ = true;
  bool io_error_ = false;
  ErrorCode code_ = ErrorCode::Parse;
  std::string message_;
};

// Read a whole file or fail with an Io-flavored Error.
std::string slurp(const std::string& path);

}  // namespace socle

#include "socle/report.hpp"

#include <fstream>
#include <sstream>

namespace socle {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
      return "PARSE";
    case ErrorCode::Io:
      return "IO";
    case ErrorCode::Cap:
      return "CAP";
    case ErrorCode::Guard:
      return "GUARD";
    case ErrorCode::Cert:
      return "CERT";
    case ErrorCode::Witness:
      return "WITNESS";
  }
  return "UNKNOWN";
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

Report::Report(std::string command_echo) : command_(std::move(command_echo)) {}

void Report::add_input(const std::string& path, std::string_view content) {
  records_.emplace_back("input", path);
  records_.emplace_back("digest", digest_hex(content));
}

void Report::add(const std::string& key, const std::string& value) {
  records_.emplace_back(key, value);
}

void Report::set_error(ErrorCode code, const std::string& message) {
  ok_ = false;
  io_error_ = (code == ErrorCode::Io);
  code_ = code;
  message_ = message;
}

void Report::set_error_io(const std::string& message) {
  set_error(ErrorCode::Io, message);
}

int Report::exit_code() const {
  if (ok_) return 0;
  switch (code_) {
    case ErrorCode::Parse:
      return 2;
    case ErrorCode::Io:
      return 3;
    case ErrorCode::Cap:
    case ErrorCode::Guard:
      return 4;
    case ErrorCode::Cert:
      return 5;
    case ErrorCode::Witness:
      return 6;
  }
  return 1;
}

std::string Report::status_line() const {
  if (ok_) return "ok";
  return "error(" + std::string(error_code_name(code_)) + ") " + message_;
}

std::string Report::machine() const {
  std::string s = "command\t" + command_ + "\n";
  for (const auto& [k, v] : records_) s += k + "\t" + v + "\n";
  s += "status\t" + status_line() + "\n";
  return s;
}

std::string Report::human() const {
  std::string s = "  command: " + command_ + "\n";
  for (const auto& [k, v] : records_) s += "  " + k + ": " + v + "\n";
  s += "  status: " + status_line() + "\n";
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read " + path);
  return buf.str();
}

}  // namespace socle

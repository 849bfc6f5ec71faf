#pragma once

#include <stdexcept>
#include <string>

namespace socle {

// Stable error classes. The CLI maps these to exit codes and prints the
// short name, so the set is part of the external contract.
enum class ErrorCode {
  Parse,    // malformed or semantically invalid input data
  Io,       // file system failure
  Cap,      // explicit size cap exceeded (group closure, word expansion)
  Guard,    // algorithmic guard exceeded (oracle sizes)
  Cert,     // certificate structurally unusable or failing
  Witness,  // witness graph structurally unusable or failing
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace socle

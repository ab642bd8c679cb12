#pragma once
#include <stdexcept>
#include <string>

namespace leg {

// Every failure carries a stable code ("LexError", "Obstructed", ...) so the
// CLI and the bindings can report it without string matching on messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace leg

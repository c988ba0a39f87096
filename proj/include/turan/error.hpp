#pragma once

#include <stdexcept>
#include <string>

namespace turan {

enum class ErrorKind {
  invalid_params,  // bad t, p, n, ids, or malformed input values
  io,              // unreadable/unwritable files, malformed edge lists
  cap_exceeded,    // memory cap, search ceiling, node budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace turan

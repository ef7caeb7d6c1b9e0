#pragma once

#include <stdexcept>
#include <string>

namespace erdos {

enum class ErrorKind {
  InvalidInput,
  ResourceLimit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

[[noreturn]] inline void throw_resource(const std::string& what) {
  throw Error(ErrorKind::ResourceLimit, what);
}

}  // namespace erdos

#pragma once

#include <stdexcept>
#include <string>

namespace xcl {

enum class ErrorKind {
  InvalidArgument,
  InvalidLabel,
  EmptyInput,
  UnsupportedSystem,
  TooLarge,
  InconsistentProfile,
  SyntaxError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xcl

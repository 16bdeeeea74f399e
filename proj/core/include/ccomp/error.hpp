#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccomp {

enum class ErrorKind {
  Input,               // malformed or mismatched input
  NumericalFailure,    // kernel non-convergence or an internal consistency check tripped
  Precondition,        // operation called outside its domain
  NoComplement,        // construction requested on a pair with no common complement
  InvalidCertificate,  // a supplied or constructed complement failed verification
  InvalidInvolution,   // a supplied involution failed one of its predicates
};

std::string_view to_string(ErrorKind kind) noexcept;

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

}  // namespace ccomp

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace linwave {

using cplx = std::complex<double>;

/// Library version string, e.g. "0.3.0".
const char* version() noexcept;

/// Error categories surfaced to callers and mapped onto CLI exit codes.
enum class ErrorCode {
  InvalidArgument,
  DomainViolation,
  BackendMismatch,
  RankMismatch,
  GridTooSmall,
  SymmetryViolated,
  BadMagic,
  TruncatedFile,
  CountMismatch,
  ParseError,
  UnknownKey,
  Unsupported,
  OutOfRange,
  SingularMetric,
  IoFailure,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace linwave

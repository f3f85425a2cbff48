#ifndef ANNLAT_ERROR_HPP
#define ANNLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace annlat {

enum class ErrorCode {
  DimensionMismatch,
  NoUnit,
  NotPositive,
  NotInAlgebra,
  NotInSubalgebra,
  NotAProjection,
  SeedNotCommuting,
  AlgebraMismatch,
  MalformedPoset,
  NotOrthomodular,
  ParseError,
  UnknownSuite,
};

/// All recoverable failures surface as Error; the code maps to a CLI exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

} // namespace annlat

#endif

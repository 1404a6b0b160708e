#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainlift {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  BadCharacteristic,
  ArityMismatch,
  RingMismatch,
  ZeroPolynomial,
  ZeroElement,
  ZeroDivisorPolynomial,
  MissingCofactors,
  LengthMismatch,
  WitnessNotOutside,
  ResolutionError,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

// Library-wide exception. `position` is a 0-based character or line offset
// for parse-time errors, Error::npos otherwise.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& msg, std::size_t pos = npos)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind),
        pos_(pos) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return pos_; }

private:
  ErrorKind kind_;
  std::size_t pos_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg,
                              std::size_t pos = Error::npos) {
  throw Error(kind, msg, pos);
}

}  // namespace chainlift

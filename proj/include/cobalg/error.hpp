#ifndef COBALG_ERROR_HPP
#define COBALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cobalg {

// Base class for all library errors. Verification mismatches are never
// reported through exceptions; they come back as report values.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input; the message names the offending token.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class ZeroDivide : public Error {
 public:
  ZeroDivide() : Error("division by zero") {}
};

// A singular pairing matrix would contradict Milnor's theorem, so hitting
// this on genuine Chern-number input means an implementation bug.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

}  // namespace cobalg

#endif

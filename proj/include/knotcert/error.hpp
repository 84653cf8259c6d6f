#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input: parse errors, dimension mismatches, bad
// matrices. Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A bundled or loaded dataset failed one of its load-time checks.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration would exceed its configured cap. Maps to CLI exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The requested root of unity is a root of the Alexander polynomial, so the
// Tristram-Levine form is degenerate there.
class SingularOmega : public InputError {
 public:
  SingularOmega(std::int64_t denominator, const std::string& context = {})
      : InputError("signature undefined: Phi_" + std::to_string(denominator) +
                   " divides the Alexander polynomial" +
                   (context.empty() ? std::string{} : " (" + context + ")")),
        denominator_(denominator) {}
  std::int64_t denominator() const noexcept { return denominator_; }

 private:
  std::int64_t denominator_;
};

}  // namespace knotcert

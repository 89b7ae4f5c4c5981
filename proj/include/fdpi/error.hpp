#pragma once

#include <stdexcept>
#include <string>

namespace fdpi {

enum class ErrorKind {
  invalid_argument,
  ring_mismatch,
  invalid_modulus,
  ramified_prime,
  not_disjoint,
  invalid_ideal,
  undefined_map,
  invalid_combination,
  field_mismatch,
  infinite_valuation,
  theorem_violation,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace fdpi

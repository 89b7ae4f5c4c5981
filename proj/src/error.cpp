#include "fdpi/error.hpp"

namespace fdpi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::ramified_prime: return "ramified-prime";
    case ErrorKind::not_disjoint: return "not-disjoint";
    case ErrorKind::invalid_ideal: return "invalid-ideal";
    case ErrorKind::undefined_map: return "undefined-map";
    case ErrorKind::invalid_combination: return "invalid-combination";
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::infinite_valuation: return "infinite-valuation";
    case ErrorKind::theorem_violation: return "theorem-violation";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fdpi

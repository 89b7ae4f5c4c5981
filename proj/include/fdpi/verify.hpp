#pragma once

#include <string>
#include <vector>

namespace fdpi {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  /// One "PASS name" / "FAIL name: detail" line per check plus a summary line.
  std::string text() const;
};

struct VerificationOptions {
  /// Perturbs the expected value of the check with this name (negative control).
  std::string corrupt;
};

/// Replays the published worked examples with exact assertions.
VerificationReport verify_paper_examples(const VerificationOptions& options = {});

/// Names of every check, in report order.
std::vector<std::string> verification_check_names();

}  // namespace fdpi

#ifndef SEXTIC_VERIFY_HPP
#define SEXTIC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "sextic/curves.hpp"

namespace sextic {

struct VerificationReport {
  enum class Status { Pass, Fail, Skipped };
  std::string name;   // "<group>.<check>"
  std::string group;
  Status status = Status::Skipped;
  std::string comparison;  // "exact", "up-to-scalar", "interval"
  std::string expected;
  std::string actual;
  std::string detail;
  double seconds = 0;
};

std::string to_string(VerificationReport::Status s);

struct VerifyOptions {
  std::optional<std::string> only;  // run a single group
  FamilyTable family = FamilyTable::published();
  std::size_t coset_limit = 1'000'000;
};

/// family, singular, pencil, group, qforms, twist
std::vector<std::string> verification_groups();

/// Runs the checks in declaration order. Exceptions become failures.
std::vector<VerificationReport> verify_paper(const VerifyOptions& options = {});

}  // namespace sextic

#endif  // SEXTIC_VERIFY_HPP

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tabseq {

enum class VerifyProfile { Quick, Full };

struct CheckOutcome {
  std::string id;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool pass = false;
};

int verify_check_count();
std::string verify_check_id(int index);  // 0-based

// Runs one numbered check (0-based) or, with nullopt, the whole profile.
VerifyReport run_verify(VerifyProfile profile, std::optional<int> only_check = std::nullopt);

std::string verify_report_json(const VerifyReport& report);

}  // namespace tabseq

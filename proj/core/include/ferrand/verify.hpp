#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ferrand {

/// One line of the verification table.
struct CheckRow {
  int criterion = 0;
  int section = 0;
  std::string claim;
  std::string source;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct VerifyOptions {
  /// 2, 3, 4, 5, or 0 for all.
  int section = 0;
  /// Upper bound on r in every grid; each criterion also has its own bound.
  int max_r = 4;
  std::uint64_t seed = 1;
};

/// Criteria 1 to 12 of the verification suite.
inline constexpr int kCriteria = 12;
int criterion_section(int criterion);
std::string criterion_title(int criterion);

std::vector<CheckRow> verify_criterion(int criterion, const VerifyOptions& options);
/// Every criterion of options.section (all when 0), in order.
std::vector<CheckRow> verify(const VerifyOptions& options);

std::string rows_to_text(const std::vector<CheckRow>& rows);
std::string rows_to_json(const std::vector<CheckRow>& rows);

}  // namespace ferrand

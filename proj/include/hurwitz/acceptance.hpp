#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
  double limit_seconds;
};

/// Runs every acceptance criterion. All comparisons are exact; a criterion
/// also fails if it exceeds its runtime limit. When progress is non-null one
/// PASS/FAIL line per criterion is written as each finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace hurwitz

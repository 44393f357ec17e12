#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace gp {

enum class Verdict { Pass, Fail, Warn };

struct CriterionResult {
  int id = 0;
  std::string name;
  Verdict verdict = Verdict::Fail;
  std::string summary;               // one line
  std::vector<std::string> details;  // supporting lines
  double seconds = 0.0;
};

std::string to_string(Verdict v);

// Runs criteria 1..10 (or the listed subset); progress lines go to log when given.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {}, int jobs = 1,
                                            std::ostream* log = nullptr);
// "PASS 3 name: summary"
std::string verdict_line(const CriterionResult& r);
// exit status: 1 when any criterion failed (warnings do not count)
int acceptance_status(const std::vector<CriterionResult>& rs);

}  // namespace gp

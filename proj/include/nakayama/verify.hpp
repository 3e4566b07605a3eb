#pragma once

#include <string>
#include <vector>

namespace nakayama {

/* outcome of one named verification suite: how many properties were checked
   and a message per failed property (empty means a clean pass) */
struct VerifyResult {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& verify_suite_names();

/* suites: reductions, theorem-a, theorem-d, roundtrip, families, chains,
   spectrum; unknown names raise validation_error */
VerifyResult verify_suite(const std::string& name, int jobs = 0);

}  // namespace nakayama

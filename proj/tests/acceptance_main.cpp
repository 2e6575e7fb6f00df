/*
   Copyright 2026 The isogram authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance gate: runs every verification suite and prints one line per
// criterion. Exits nonzero if any criterion fails. Pass --heavy to include
// the expensive degree-8 rows (excluded from the default gate).

#include <cstring>
#include <iostream>

#include "verify/verify.hpp"

int main(int argc, char** argv) {
  isogram::verify::Options opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--heavy") == 0) opt.heavy = true;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opt.seed = std::stoull(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--heavy] [--seed S]\n";
      return 2;
    }
  }

  struct Criterion {
    const char* label;
    std::vector<const char*> suites;
  };
  const std::vector<Criterion> criteria = {
      {"1. minor identities (70 symbolic + 200 random)", {"plucker"}},
      {"2. minor census (counts, terms, span 336)", {"census"}},
      {"3. span table for (2,4) and (2,3)", {"table1"}},
      {"4. dimension formulas vs Jacobian ranks", {"dims"}},
      {"5. two-point dimensions (n = 3..10)", {"twopoint"}},
      {"6. interpolation tables (z<=6, degree 7, degree 8)",
       {"lemma54", "lemma55", "lemma56"}},
      {"7. fixture vanishing", {"fixtures"}},
      {"8. component machinery", {"components"}},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    bool pass = true;
    long long ms = 0;
    std::vector<isogram::verify::SuiteResult> results;
    for (const char* name : c.suites) {
      auto r = isogram::verify::run_suite(name, opt);
      pass &= r.pass;
      ms += r.elapsed_ms;
      results.push_back(std::move(r));
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.label << "  (" << ms
              << " ms)\n";
    if (!pass)
      for (const auto& r : results)
        for (const auto& chk : r.checks)
          if (!chk.pass)
            std::cout << "      failed: [" << r.suite << "] " << chk.name
                      << ": got " << chk.actual << ", want " << chk.expected
                      << "\n";
    all_pass &= pass;
  }
  std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return all_pass ? 0 : 1;
}

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

#ifndef ISOGRAM_VERIFY_HPP
#define ISOGRAM_VERIFY_HPP

#include <string>
#include <vector>

#include "algebra/prime_field.hpp"

namespace isogram::verify {

struct Options {
  algebra::u64 prime = algebra::kDefaultPrime;
  algebra::u64 prime2 = algebra::kDefaultSecondPrime;
  algebra::u64 seed = algebra::kDefaultSeed;
  int trials = 16;
  bool heavy = false;       // include the expensive degree-8 rows
  int col_k = 0, col_n = 0; // restrict the span table to one column
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;  // the target value and where it comes from
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  long long elapsed_ms = 0;
  std::vector<CheckResult> checks;
};

/// Suites: plucker, census, table1, dims, twopoint, lemma54, lemma55,
/// lemma56, fixtures, components; "all" runs every one of them.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace isogram::verify

#endif

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

#include <string>

#include "doctest.h"
#include "isogram/isogram.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Engine {
  isg_engine* e = nullptr;
  explicit Engine(const char* cfg = nullptr) {
    REQUIRE(isg_engine_new(cfg, &e) == ISG_OK);
  }
  ~Engine() { isg_engine_free(e); }
};

json run(isg_status st, isg_result** res) {
  REQUIRE(st == ISG_OK);
  json parsed = json::parse(isg_result_json(*res));
  isg_result_free(*res);
  *res = nullptr;
  return parsed;
}

}  // namespace

TEST_CASE("engine configuration errors") {
  isg_engine* e = nullptr;
  CHECK(isg_engine_new("{\"prime\": \"10\"}", &e) == ISG_ERR_ARGUMENT);
  CHECK(e == nullptr);
  CHECK(std::string(isg_last_error()).find("prime") != std::string::npos);
  CHECK(isg_engine_new("{\"prime\": \"10007\", \"prime2\": \"10007\"}", &e) ==
        ISG_ERR_ARGUMENT);
  CHECK(isg_engine_new("{\"trials\": 2}", &e) == ISG_ERR_ARGUMENT);
  CHECK(isg_engine_new(nullptr, &e) == ISG_OK);
  isg_engine_free(e);
}

TEST_CASE("formulas endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_gram_formulas(eng.e, 2, 3, 5, &res), &res);
  CHECK(rep["results"]["dimension"] == 11);
  CHECK(rep["results"]["expected_degree"] == "6");
  CHECK(rep["results"]["components"] == "1");
  CHECK(rep["results"]["variable_count"] == 12);

  isg_result* bad = nullptr;
  CHECK(isg_gram_formulas(eng.e, 0, 3, 5, &bad) == ISG_ERR_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(isg_gram_formulas(eng.e, 2, 3, 99, &bad) == ISG_ERR_ARGUMENT);
}

TEST_CASE("rank-2 census carries both totals") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_gram_formulas(eng.e, 2, 4, 2, &res), &res);
  CHECK(rep["results"]["segre"]["as_stated_total"] == "168");
  CHECK(rep["results"]["segre"]["unordered_total"] == "84");
  CHECK(rep["results"]["segre"]["totals_disagree"] == true);
}

TEST_CASE("minor census endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_gram_minors(eng.e, 2, 3, 6, 1, &res), &res);
  CHECK(rep["results"]["count"] == 1);
  CHECK(rep["results"]["minors"][0]["terms"] == 40);
}

TEST_CASE("span endpoint agrees across primes") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_gram_span_dim(eng.e, 2, 3, 5, &res), &res);
  CHECK(rep["results"]["span_dimension"] == 21);
  CHECK(rep["results"]["two_prime_agreement"] == true);
}

TEST_CASE("plucker endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_gram_plucker(eng.e, 6, 3, 25, &res), &res);
  CHECK(rep["results"]["all_hold"] == true);
  CHECK(rep["results"]["pass"] == 25);
}

TEST_CASE("sampling endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_sample(eng.e, "nullcone", 2, 3, 5, 2, &res), &res);
  CHECK(rep["results"]["records"].size() == 2);
  for (const auto& rec : rep["results"]["records"]) {
    CHECK(rec["checks"]["isotropy"] == true);
    CHECK(rec["checks"]["rank_le_5"] == true);
  }
  isg_result* bad = nullptr;
  CHECK(isg_sample(eng.e, "unknown", 2, 3, 5, 1, &bad) == ISG_ERR_ARGUMENT);
}

TEST_CASE("deterministic reports for a fixed seed") {
  Engine eng("{\"seed\": \"7\"}");
  auto once = [&] {
    isg_result* res = nullptr;
    json rep = run(isg_sample(eng.e, "spinor", 2, 3, 4, 1, &res), &res);
    rep.erase("elapsed_ms");
    return rep.dump();
  };
  CHECK(once() == once());
}

TEST_CASE("dimension endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_dim(eng.e, "gram", 2, 3, 5, &res), &res);
  CHECK(rep["results"]["dimension"] == 11);
  CHECK(rep["results"]["two_prime_agreement"] == true);
}

TEST_CASE("interp degree endpoint") {
  Engine eng;
  isg_result* res = nullptr;
  const int e[] = {0, 1, 1, 1};
  const int f[] = {0, 1, 1, 1};
  const json rep = run(isg_interp_degree(eng.e, 4, 5, e, f, "", &res), &res);
  CHECK(rep["results"]["relation_dim"] == 1);
  CHECK(rep["results"]["mingens"] == 1);
  CHECK(rep["results"]["two_prime_agreement"] == true);
}

TEST_CASE("verify endpoint, single cheap suite") {
  Engine eng;
  isg_result* res = nullptr;
  const json rep = run(isg_verify(eng.e, "fixtures", nullptr, &res), &res);
  CHECK(rep["results"]["pass"] == true);
  isg_result* bad = nullptr;
  CHECK(isg_verify(eng.e, "nonsense", nullptr, &bad) == ISG_ERR_ARGUMENT);
}

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

// Command-line front end. Talks to the engine exclusively through the
// public C interface of the shared library.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "isogram/isogram.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct GlobalConfig {
  std::string prime, prime2, seed;
  int trials = 0;
  std::string config_file;
  std::string format = "json";
  std::string output;
};

// key=value lines; explicit flags win over file entries
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::string engine_config_json(const GlobalConfig& g) {
  json cfg = json::object();
  std::map<std::string, std::string> file;
  if (!g.config_file.empty()) file = read_config_file(g.config_file);
  auto set = [&](const char* key, const std::string& flag_value) {
    if (!flag_value.empty()) cfg[key] = flag_value;
    else if (file.count(key)) cfg[key] = file[key];
  };
  set("prime", g.prime);
  set("prime2", g.prime2);
  set("seed", g.seed);
  if (g.trials) cfg["trials"] = g.trials;
  else if (file.count("trials")) cfg["trials"] = std::stoi(file["trials"]);
  return cfg.dump();
}

// keys whose `false` value marks a failed check
bool tree_passes(const json& v) {
  static const char* kGates[] = {"pass",       "all_hold",   "all_match",
                                 "two_prime_agreement", "stabilized", "isotropy",
                                 "hv_quadrics"};
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      for (const char* g : kGates)
        if (it.key() == g && it.value().is_boolean() && !it.value().get<bool>())
          return false;
      if (!tree_passes(it.value())) return false;
    }
  } else if (v.is_array()) {
    for (const auto& e : v)
      if (!tree_passes(e)) return false;
  }
  return true;
}

void print_table(std::ostream& os, const json& rep) {
  os << rep.value("command", "") << "  (prime " << rep.value("prime", "") << ", seed "
     << rep.value("seed", "") << ", " << rep.value("elapsed_ms", 0) << " ms)\n";
  if (!rep.contains("results")) return;
  const json& res = rep["results"];
  if (res.contains("suites")) {
    for (const auto& suite : res["suites"]) {
      os << "suite " << suite.value("suite", "") << ": "
         << (suite.value("pass", false) ? "PASS" : "FAIL") << " ("
         << suite.value("elapsed_ms", 0) << " ms)\n";
      for (const auto& c : suite["checks"])
        os << "  [" << (c.value("pass", false) ? "pass" : "FAIL") << "] "
           << c.value("name", "") << ": " << c.value("actual", "") << " vs "
           << c.value("expected", "") << "\n";
    }
    return;
  }
  std::function<void(const json&, std::string)> walk = [&](const json& v,
                                                           std::string prefix) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it)
        walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (v.is_array()) {
      if (v.size() > 8) {
        os << prefix << " = [" << v.size() << " entries]\n";
        return;
      }
      int i = 0;
      for (const auto& e : v) walk(e, prefix + "[" + std::to_string(i++) + "]");
    } else {
      os << prefix << " = " << v.dump() << "\n";
    }
  };
  walk(res, "");
}

int emit(const GlobalConfig& g, isg_result* res) {
  const std::string text = isg_result_json(res);
  isg_result_free(res);
  json rep = json::parse(text);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      std::cerr << "error: cannot open output file " << g.output << "\n";
      return 1;
    }
    os = &file;
  }
  if (g.format == "table") print_table(*os, rep);
  else *os << rep.dump(2) << "\n";
  return tree_passes(rep) ? 0 : 1;
}

int fail(isg_status st) {
  std::cerr << "error: " << isg_last_error() << "\n";
  return st == ISG_ERR_ARGUMENT ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on block-zero Gram determinantal varieties"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalConfig g;
  app.add_option("--prime", g.prime, "working prime (default 2^62-57)");
  app.add_option("--prime2", g.prime2, "cross-check prime");
  app.add_option("--seed", g.seed, "64-bit RNG seed");
  app.add_option("--trials", g.trials, "Jacobian trials per dimension scan");
  app.add_option("--config", g.config_file, "key=value configuration file");
  app.add_option("--format", g.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output", g.output, "write the report to a file");

  // gram
  auto* gram = app.add_subcommand("gram", "symbolic minors and closed-form census");
  int k = 2, n = 3, r = 5, size = 6, m = 6, count = 100;
  bool polys = false;
  auto* minors = gram->add_subcommand("minors", "census of size x size minors");
  minors->add_option("--k", k)->required();
  minors->add_option("--n", n)->required();
  minors->add_option("--size", size)->required();
  minors->add_flag("--polys", polys, "include polynomial text");
  auto* plucker = gram->add_subcommand("plucker", "random minor identities");
  plucker->add_option("--m", m)->required();
  plucker->add_option("--size", size)->required();
  plucker->add_option("--count", count);
  auto* span = gram->add_subcommand("span-dim", "rank of the minor span");
  span->add_option("--k", k)->required();
  span->add_option("--n", n)->required();
  span->add_option("--size", size)->required();
  auto* formulas = gram->add_subcommand("formulas", "dimension/degree/components");
  formulas->add_option("--k", k)->required();
  formulas->add_option("--n", n)->required();
  formulas->add_option("--r", r)->required();

  // sample
  auto* sample = app.add_subcommand("sample", "parametrized configurations");
  std::string kind;
  sample->add_option("kind", kind, "nullcone|spinor|isotropic|segre|hadamard")
      ->required();
  int sk = 2, sn = 4, sr = 5, scount = 1;
  sample->add_option("--k", sk);
  sample->add_option("--n", sn);
  sample->add_option("--r", sr);
  sample->add_option("--count", scount);

  // dim
  auto* dim = app.add_subcommand("dim", "Jacobian-rank dimension scans");
  auto* dgram = dim->add_subcommand("gram", "Gram-entry map");
  int dk = 2, dn = 4, dr = 5, nmax = 10;
  dgram->add_option("--k", dk);
  dgram->add_option("--n", dn)->required();
  dgram->add_option("--r", dr)->required();
  auto* dphv = dim->add_subcommand("phv", "invariant map");
  dphv->add_option("--n", dn)->required();
  dphv->add_option("--r", dr)->required();
  auto* dtwo = dim->add_subcommand("twopoint", "two-point map");
  dtwo->add_option("--n", dn)->required();
  dtwo->add_option("--r", dr)->required();
  auto* dconj = dim->add_subcommand("conjecture", "two-point dimension table");
  dconj->add_option("--n-max", nmax);

  // interp
  auto* interp = app.add_subcommand("interp", "multigraded relation interpolation");
  auto* iscan = interp->add_subcommand("scan", "scan degrees up to a z bound");
  int in_ = 4, ir = 5, zmax = 6;
  std::string ledger, vector_arg;
  iscan->add_option("--n", in_)->required();
  iscan->add_option("--r", ir)->required();
  iscan->add_option("--zdeg-max", zmax)->required();
  iscan->add_option("--ledger", ledger);
  auto* idegree = interp->add_subcommand("degree", "scan one multidegree");
  idegree->add_option("--n", in_)->required();
  idegree->add_option("--r", ir)->required();
  idegree->add_option("--vector", vector_arg, "e1,..,en,f1,..,fn")->required();
  idegree->add_option("--ledger", ledger);
  auto* ilift = interp->add_subcommand("lift", "lift stored generators to Q");
  ilift->add_option("--ledger", ledger)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  std::string suite = "all", col;
  bool heavy = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--col", col, "restrict table1 to one column, e.g. 2,4");
  verify->add_flag("--heavy", heavy, "include the expensive degree-8 rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  isg_engine* eng = nullptr;
  isg_status st = isg_engine_new(engine_config_json(g).c_str(), &eng);
  if (st != ISG_OK) return fail(st);
  struct EngineGuard {
    isg_engine* e;
    ~EngineGuard() { isg_engine_free(e); }
  } guard{eng};

  isg_result* res = nullptr;
  if (minors->parsed()) st = isg_gram_minors(eng, k, n, size, polys, &res);
  else if (plucker->parsed()) st = isg_gram_plucker(eng, m, size, count, &res);
  else if (span->parsed()) st = isg_gram_span_dim(eng, k, n, size, &res);
  else if (formulas->parsed()) st = isg_gram_formulas(eng, k, n, r, &res);
  else if (sample->parsed()) st = isg_sample(eng, kind.c_str(), sk, sn, sr, scount, &res);
  else if (dgram->parsed()) st = isg_dim(eng, "gram", dk, dn, dr, &res);
  else if (dphv->parsed()) st = isg_dim(eng, "phv", 2, dn, dr, &res);
  else if (dtwo->parsed()) st = isg_dim(eng, "twopoint", 2, dn, dr, &res);
  else if (dconj->parsed()) st = isg_dim_conjecture(eng, nmax, &res);
  else if (iscan->parsed())
    st = isg_interp_scan(eng, in_, ir, zmax, ledger.c_str(), &res);
  else if (idegree->parsed()) {
    std::vector<int> vals;
    std::stringstream ss(vector_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    if ((int)vals.size() != 2 * in_) {
      std::cerr << "error: --vector needs " << 2 * in_ << " entries\n";
      return 2;
    }
    st = isg_interp_degree(eng, in_, ir, vals.data(), vals.data() + in_,
                           ledger.c_str(), &res);
  } else if (ilift->parsed()) {
    st = isg_interp_lift(eng, ledger.c_str(), &res);
  } else if (verify->parsed()) {
    json opts = json::object();
    if (heavy) opts["heavy"] = true;
    if (!col.empty()) {
      const auto comma = col.find(',');
      if (comma == std::string::npos) {
        std::cerr << "error: --col expects k,n\n";
        return 2;
      }
      opts["col"] = {std::stoi(col.substr(0, comma)), std::stoi(col.substr(comma + 1))};
    }
    st = isg_verify(eng, suite.c_str(), opts.dump().c_str(), &res);
  } else {
    std::cerr << "error: missing subcommand\n";
    return 2;
  }
  if (st != ISG_OK) return fail(st);
  return emit(g, res);
}

// Acceptance suite: runs every verification criterion the workbench promises
// and prints one pass/fail line each, including the runtime bound.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qdw/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* description;
  double time_limit_s;
  bool (*run)(const qdw::verify::Options&, std::string& detail);
};

bool run_check(qdw::verify::CheckResult (*fn)(const qdw::verify::Options&),
               const qdw::verify::Options& opt, std::string& detail) {
  auto r = fn(opt);
  if (!r.passed && r.details.contains("failures") && !r.details["failures"].empty())
    detail = r.details["failures"][0].get<std::string>();
  return r.passed;
}

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string(QDW_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  exit_code = pclose(p);
  return out;
}

bool determinism(const qdw::verify::Options& opt, std::string& detail) {
  (void)opt;
  // Byte-identical JSON summaries from two full-suite CLI runs, same seed.
  int c1 = 0, c2 = 0;
  std::string a = run_cli("verify all --seed 1 --format json", c1);
  std::string b = run_cli("verify all --seed 1 --format json", c2);
  if (c1 != 0 || c2 != 0) {
    detail = "cli exited nonzero";
    return false;
  }
  if (a.empty() || a != b) {
    detail = "summaries differ between runs";
    return false;
  }
  return true;
}

const Criterion kCriteria[] = {
    {1, "quantale laws (Lukasiewicz n<=9, Godel, two, Boolean 2x2, df 2x2; M3 witness)", 5.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_quantale_laws, o, d);
     }},
    {2, "Girard double negation (Lukasiewicz holds, Godel-3 fails at 1/2)", 1.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_girard, o, d);
     }},
    {3, "level-set encoding bijection and relational axiomatisation", 30.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_seal_encoding, o, d);
     }},
    {4, "L-closure is a closure operator; epi=dense, regmono=closed embedding", 60.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_l_closure, o, d);
     }},
    {5, "adjoint pairs: representables, colimit criterion, completion", 60.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_cauchy, o, d);
     }},
    {6, "finite separated structures are Priestley; reflection is universal", 120.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_priestley, o, d);
     }},
    {7, "dual objects: carriers, Phi_w witness, j isomorphism, full faithfulness", 600.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_duality, o, d);
     }},
    {8, "induced convergence: structure recovery, mu on characteristics", 60.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_mu_lemma, o, d);
     }},
    {9, "ordered side: irreducibility equivalence, function detection", 120.0,
     [](const qdw::verify::Options& o, std::string& d) {
       return run_check(qdw::verify::check_ordered, o, d);
     }},
    {10, "determinism: identical seeds give byte-identical JSON summaries", 600.0, determinism},
};

}  // namespace

int main() {
  qdw::verify::Options opt;
  opt.seed = 1;
  int failures = 0;
  for (const auto& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(opt, detail);
    } catch (const qdw::Error& e) {
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = elapsed < c.time_limit_s;
    bool pass = ok && in_time;
    std::printf("criterion %2d [%s] %s (%.2fs / limit %.0fs)%s%s\n", c.number,
                pass ? "PASS" : "FAIL", c.description, elapsed, c.time_limit_s,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}

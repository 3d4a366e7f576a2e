#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdw/cauchy.hpp"
#include "qdw/io.hpp"
#include "qdw/verify.hpp"

namespace {

using qdw::Json;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitSearchSpace = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnknownRef = 4;
constexpr int kExitUsage = 64;

int exit_code_for(const qdw::Error& e) {
  switch (e.kind) {
    case qdw::ErrorKind::SearchSpaceTooLarge: return kExitSearchSpace;
    case qdw::ErrorKind::ParseError: return kExitParse;
    case qdw::ErrorKind::UnknownQuantaleRef: return kExitUnknownRef;
    default: return kExitLawFailure;
  }
}

struct Common {
  std::vector<std::string> files;
  std::string object;
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_size = 0;
  std::uint64_t budget = 0;

  qdw::Workspace workspace() const {
    qdw::Workspace ws;
    ws.seed = seed;
    if (budget) ws.budget.max_maps = budget;
    qdw::load_files(files, ws);
    return ws;
  }
};

const qdw::VCat& pick_vcat(const qdw::Workspace& ws, const std::string& name) {
  if (!name.empty()) {
    auto it = ws.vcats.find(name);
    if (it == ws.vcats.end())
      qdw::fail(qdw::ErrorKind::BadDocument, "no vcategory named \"" + name + "\" loaded");
    return it->second;
  }
  if (ws.vcats.size() != 1)
    qdw::fail(qdw::ErrorKind::BadDocument,
              "exactly one vcategory document expected; use --vcat to pick one");
  return ws.vcats.begin()->second;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int run_check(const Common& c) {
  qdw::Workspace ws;
  if (c.budget) ws.budget.max_maps = c.budget;
  Json report;
  report["documents"] = Json::array();
  bool ok = true;
  try {
    auto loaded = qdw::load_files(c.files, ws);
    for (const auto& d : loaded) {
      Json doc;
      doc["name"] = d.name;
      switch (d.kind) {
        case qdw::DocKind::Quantale:
          doc["kind"] = "quantale";
          doc["summary"] = qdw::quantale_summary(*ws.quantales.at(d.name));
          break;
        case qdw::DocKind::VCategory:
          doc["kind"] = "vcategory";
          doc["summary"] = qdw::vcat_summary(ws.vcats.at(d.name));
          break;
        case qdw::DocKind::Poset:
          doc["kind"] = "poset";
          doc["summary"] = {{"points", ws.posets.at(d.name).n}};
          break;
      }
      doc["status"] = "ok";
      report["documents"].push_back(std::move(doc));
    }
  } catch (const qdw::Error& e) {
    report["documents"].push_back({{"status", "error"}, {"error", qdw::error_json(e)}});
    ok = false;
    report["ok"] = false;
    emit(c, report, std::string("error: ") + e.what() + "\n");
    return exit_code_for(e);
  }
  report["ok"] = ok;
  std::string text;
  for (const auto& d : report["documents"])
    text += d.value("name", "?") + ": " + d.value("status", "?") + "\n";
  emit(c, report, text);
  return ok ? kExitOk : kExitLawFailure;
}

int run_priestley(const Common& c) {
  auto ws = c.workspace();
  const auto& X = pick_vcat(ws, c.object);
  auto rep = qdw::is_priestley(X, ws.budget);
  Json j = qdw::priestley_report_json(X, rep);
  std::string text = "priestley: " + std::string(rep.ok() ? "true" : "false") + "\n" +
                     "  cone size: " + std::to_string(rep.cone_size) + "\n";
  if (!rep.point_separating)
    text += "  not point-separating at (" + X.label(rep.separation_witness.first) + "," +
            X.label(rep.separation_witness.second) + ")\n";
  if (!rep.initial)
    text += "  not initial at (" + X.label(rep.worst_x) + "," + X.label(rep.worst_y) + ")\n";
  emit(c, j, text);
  return kExitOk;
}

int run_reflect(const Common& c) {
  auto ws = c.workspace();
  const auto& X = pick_vcat(ws, c.object);
  auto [quot, P] = qdw::reflect_pi0(X, ws.budget);
  Json j;
  j["vcategory"] = X.name;
  j["classes"] = P.m;
  j["quotient_map"] = Json::array();
  for (int x = 0; x < X.m; ++x)
    j["quotient_map"].push_back({{"point", X.label(x)}, {"class", P.label(quot.map[x])}});
  j["structure"] = Json::array();
  for (int i = 0; i < P.m; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < P.m; ++jj) row.push_back(X.q->label(P.at(i, jj)));
    j["structure"].push_back(std::move(row));
  }
  std::string text = "reflection: " + std::to_string(P.m) + " classes\n";
  for (int x = 0; x < X.m; ++x)
    text += "  " + X.label(x) + " -> " + P.label(quot.map[x]) + "\n";
  emit(c, j, text);
  return kExitOk;
}

int run_dualize(const Common& c) {
  auto ws = c.workspace();
  const auto& X = pick_vcat(ws, c.object);
  auto cx = qdw::DualObject::build(X, ws.budget);
  Json j;
  j["vcategory"] = X.name;
  j["carrier_size"] = cx.size();
  j["finlat_closed"] = cx.finlat_closed();
  j["tensor_closed"] = cx.tensor_closed();
  j["carrier"] = Json::array();
  std::string text = "dual object: " + std::to_string(cx.size()) + " morphisms into V^op\n";
  for (int i = 0; i < cx.size(); ++i) {
    j["carrier"].push_back(qdw::format_value_tuple(*X.q, cx.member(i)));
    text += "  " + qdw::format_value_tuple(*X.q, cx.member(i)) + "\n";
  }
  emit(c, j, text);
  return kExitOk;
}

int run_complete(const Common& c) {
  auto ws = c.workspace();
  const auto& X = pick_vcat(ws, c.object);
  auto comp = qdw::cauchy_completion(X, ws.budget);
  bool complete = qdw::is_cauchy_complete(X, ws.budget);
  Json j;
  j["vcategory"] = X.name;
  j["adjoint_pairs"] = comp.points.size();
  j["cauchy_complete"] = complete;
  j["yoneda"] = Json::array();
  for (int x = 0; x < X.m; ++x) j["yoneda"].push_back(comp.yoneda.map[x]);
  std::string text = "cauchy completion: " + std::to_string(comp.points.size()) +
                     " adjoint pairs; X " + (complete ? "is" : "is not") + " Cauchy complete\n";
  emit(c, j, text);
  return kExitOk;
}

int run_closure(const Common& c, const std::string& subset) {
  auto ws = c.workspace();
  const auto& X = pick_vcat(ws, c.object);
  std::vector<int> M;
  std::string token;
  std::stringstream ss(subset);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    auto it = std::find(X.labels.begin(), X.labels.end(), token);
    if (it != X.labels.end()) {
      M.push_back(static_cast<int>(it - X.labels.begin()));
    } else {
      try {
        int v = std::stoi(token);
        if (v < 0 || v >= X.m) throw std::out_of_range("point");
        M.push_back(v);
      } catch (...) {
        qdw::fail(qdw::ErrorKind::BadDocument, "unknown point \"" + token + "\"");
      }
    }
  }
  std::sort(M.begin(), M.end());
  M.erase(std::unique(M.begin(), M.end()), M.end());
  auto cl = qdw::l_closure(X, M, ws.budget);
  Json j;
  j["vcategory"] = X.name;
  j["subset"] = qdw::format_subset(X, M);
  j["closure"] = qdw::format_subset(X, cl);
  // The closure is topological only when the totally-below sets are
  // directed; flag quantales where that fails.
  j["assumption3_holds"] = X.q->assumption3_holds();
  std::string text = "closure of " + qdw::format_subset(X, M) + " = " + qdw::format_subset(X, cl) + "\n";
  if (!X.q->assumption3_holds())
    text += "  note: quantale fails the directedness assumption; the closure is still definitional\n";
  emit(c, j, text);
  return kExitOk;
}

int run_verify(const Common& c, const std::string& suite) {
  if (!qdw::verify::known_suite(suite)) {
    std::cerr << "unknown suite \"" << suite << "\" (core|duality|ordered|all)\n";
    return kExitUsage;
  }
  qdw::verify::Options opt;
  opt.seed = c.seed;
  opt.max_size = c.max_size;
  if (c.budget) opt.budget.max_maps = c.budget;
  auto results = qdw::verify::run_suite(suite, opt);
  Json j = qdw::verify::summary_json(suite, opt, results);
  std::string text;
  bool ok = true;
  for (const auto& cr : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %s  (%.2fs)\n", cr.name.c_str(),
                  cr.passed ? "pass" : "FAIL", cr.seconds);
    text += line;
    if (!cr.passed) ok = false;
  }
  text += ok ? "all checks passed\n" : "FAILURES\n";
  emit(c, j, text);
  return ok ? kExitOk : kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdw: finite quantale-enriched Priestley duality workbench"};
  app.require_subcommand(1);

  Common c;
  std::string suite = "all", subset;

  auto add_common = [&](CLI::App* sub, bool with_files) {
    if (with_files)
      sub->add_option("files", c.files, "JSON documents")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", c.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", c.budget, "enumeration budget (overrides QDW_BUDGET)");
  };

  auto* check = app.add_subcommand("check", "validate documents");
  add_common(check, true);

  auto* priestley = app.add_subcommand("priestley", "point-separating/initial cone report");
  add_common(priestley, true);
  priestley->add_option("--vcat", c.object, "vcategory name");

  auto* reflect = app.add_subcommand("reflect", "Priestley reflection");
  add_common(reflect, true);
  reflect->add_option("--vcat", c.object, "vcategory name");

  auto* dualize = app.add_subcommand("dualize", "dual object carrier");
  add_common(dualize, true);
  dualize->add_option("--vcat", c.object, "vcategory name");

  auto* complete = app.add_subcommand("complete", "Cauchy completion");
  add_common(complete, true);
  complete->add_option("--vcat", c.object, "vcategory name");

  auto* closure = app.add_subcommand("closure", "L-closure of a point set");
  add_common(closure, true);
  closure->add_option("--vcat", c.object, "vcategory name");
  closure->add_option("--points", subset, "comma separated point labels or indices");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "core|duality|ordered|all");
  verify->add_option("--seed", c.seed, "PRNG seed for the random suites");
  verify->add_option("--max-size", c.max_size, "cap instance sizes");
  verify->add_option("--format", c.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--budget", c.budget, "enumeration budget (overrides QDW_BUDGET)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(c);
    if (priestley->parsed()) return run_priestley(c);
    if (reflect->parsed()) return run_reflect(c);
    if (dualize->parsed()) return run_dualize(c);
    if (complete->parsed()) return run_complete(c);
    if (closure->parsed()) return run_closure(c, subset);
    if (verify->parsed()) return run_verify(c, suite);
  } catch (const qdw::Error& e) {
    if (c.format == "json") std::cout << qdw::error_json(e).dump(2) << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLawFailure;
  }
  return kExitUsage;
}

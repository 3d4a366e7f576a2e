#include "qdw/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qdw {

DocKind classify_document(const Json& doc) {
  if (doc.contains("tensor")) return DocKind::Quantale;
  if (doc.contains("quantale")) return DocKind::VCategory;
  if (doc.contains("leq")) return DocKind::Poset;
  fail(ErrorKind::BadDocument, "document is neither a quantale, a vcategory nor a poset");
}

namespace {

std::vector<std::vector<bool>> bool_matrix(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::BadDocument, std::string(what) + " must be a matrix");
  std::vector<std::vector<bool>> m;
  for (const auto& row : j) {
    std::vector<bool> r;
    for (const auto& e : row) r.push_back(e.get<bool>());
    m.push_back(std::move(r));
  }
  return m;
}

int element_index(const Json& e, const std::vector<std::string>& labels, const char* what) {
  if (e.is_number_integer()) {
    int v = e.get<int>();
    if (v < 0 || v >= static_cast<int>(labels.size()))
      fail(ErrorKind::BadDocument, std::string(what) + ": index out of range");
    return v;
  }
  if (e.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
    if (it == labels.end())
      fail(ErrorKind::BadDocument, std::string(what) + ": unknown label " + e.get<std::string>());
    return static_cast<int>(it - labels.begin());
  }
  fail(ErrorKind::BadDocument, std::string(what) + ": entries must be indices or labels");
}

}  // namespace

QuantalePtr parse_quantale(const Json& doc) {
  auto labels = doc.at("elements").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> leq;
  if (doc.at("order").is_string()) {
    if (doc.at("order").get<std::string>() != "chain")
      fail(ErrorKind::BadDocument, "order must be \"chain\" or a boolean matrix");
    leq.assign(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq[i][j] = i <= j;
  } else {
    leq = bool_matrix(doc.at("order"), "order");
  }
  std::vector<std::vector<int>> tensor(n, std::vector<int>(n));
  if (doc.at("tensor").is_string()) {
    auto kind = doc.at("tensor").get<std::string>();
    if (!doc.at("order").is_string())
      fail(ErrorKind::BadDocument, "named tensors require order \"chain\"");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (kind == "lukasiewicz") tensor[i][j] = std::max(0, i + j - (n - 1));
        else if (kind == "minimum") tensor[i][j] = std::min(i, j);
        else fail(ErrorKind::BadDocument, "unknown tensor \"" + kind + "\"");
      }
  } else {
    const auto& t = doc.at("tensor");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tensor[i][j] = element_index(t.at(i).at(j), labels, "tensor");
  }
  int unit = element_index(doc.at("unit"), labels, "unit");
  std::vector<int> dense;
  if (doc.contains("dense"))
    for (const auto& e : doc.at("dense")) dense.push_back(element_index(e, labels, "dense"));
  std::string name = doc.value("name", "");
  return Quantale::build_table(std::move(leq), std::move(tensor), unit, std::move(labels),
                               std::move(dense), std::move(name));
}

VCat parse_vcat(const Json& doc, const Workspace& ws) {
  auto qname = doc.at("quantale").get<std::string>();
  auto it = ws.quantales.find(qname);
  if (it == ws.quantales.end())
    fail(ErrorKind::UnknownQuantaleRef, "vcategory references unknown quantale \"" + qname + "\"");
  const QuantalePtr& q = it->second;
  auto points = doc.at("points").get<std::vector<std::string>>();
  const int m = static_cast<int>(points.size());
  std::vector<std::vector<int>> a(m, std::vector<int>(m));
  const auto& mat = doc.at("a");
  if (static_cast<int>(mat.size()) != m) fail(ErrorKind::BadDocument, "structure matrix size mismatch");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) a[x][y] = element_index(mat.at(x).at(y), q->labels(), "a");
  return VCat::make(q, std::move(a), std::move(points), doc.value("name", ""));
}

FinPoset parse_poset(const Json& doc) {
  auto labels = doc.at("points").get<std::vector<std::string>>();
  return FinPoset::make(bool_matrix(doc.at("leq"), "leq"), std::move(labels), doc.value("name", ""));
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    fail(ErrorKind::ParseError, path + ":" + std::to_string(line) + ": " + e.what(),
         {static_cast<long long>(line)});
  }
}

std::string doc_name(const Json& doc, const std::string& path) {
  std::string name = doc.value("name", "");
  if (name.empty()) name = std::filesystem::path(path).stem().string();
  return name;
}

}  // namespace

std::vector<LoadedDoc> load_files(const std::vector<std::string>& paths, Workspace& ws) {
  std::vector<std::pair<std::string, Json>> docs;
  for (const auto& p : paths) docs.emplace_back(p, read_json_file(p));
  std::vector<LoadedDoc> out;
  for (int pass = 0; pass < 2; ++pass)
    for (auto& [path, doc] : docs) {
      DocKind kind = classify_document(doc);
      bool first = kind == DocKind::Quantale;
      if ((pass == 0) != first) continue;
      std::string name = doc_name(doc, path);
      switch (kind) {
        case DocKind::Quantale:
          if (ws.quantales.count(name))
            fail(ErrorKind::BadDocument, "duplicate quantale \"" + name + "\"");
          ws.quantales.emplace(name, parse_quantale(doc));
          break;
        case DocKind::VCategory: {
          if (ws.vcats.count(name)) fail(ErrorKind::BadDocument, "duplicate vcategory \"" + name + "\"");
          VCat X = parse_vcat(doc, ws);
          X.name = name;
          ws.vcats.emplace(name, std::move(X));
          break;
        }
        case DocKind::Poset: {
          if (ws.posets.count(name)) fail(ErrorKind::BadDocument, "duplicate poset \"" + name + "\"");
          FinPoset P = parse_poset(doc);
          P.name = name;
          ws.posets.emplace(name, std::move(P));
          break;
        }
      }
      out.push_back({kind, name});
    }
  return out;
}

Json quantale_summary(const Quantale& q) {
  Json j;
  j["name"] = q.name();
  j["size"] = q.size();
  j["unit"] = q.label(q.unit());
  j["trivial"] = q.is_trivial();
  j["chain"] = q.is_chain();
  j["completely_distributive"] = q.is_completely_distributive();
  j["girard"] = q.is_girard();
  j["assumption3"] = q.assumption3_holds();
  return j;
}

Json vcat_summary(const VCat& X) {
  Json j;
  j["name"] = X.name;
  j["points"] = X.m;
  j["quantale"] = X.q->name();
  auto v = X.validate();
  j["valid"] = !v.has_value();
  if (v) {
    j["violation"] = v->message;
  } else {
    j["separated"] = X.is_separated();
  }
  return j;
}

Json priestley_report_json(const VCat& X, const PriestleyReport& r) {
  Json j;
  j["vcategory"] = X.name;
  j["priestley"] = r.ok();
  j["cone_size"] = r.cone_size;
  j["point_separating"] = r.point_separating;
  if (!r.point_separating)
    j["separation_witness"] = {X.label(r.separation_witness.first),
                               X.label(r.separation_witness.second)};
  j["initial"] = r.initial;
  if (!r.initial) {
    j["initiality_witness"] = {{"x", X.label(r.worst_x)},
                               {"y", X.label(r.worst_y)},
                               {"structure", X.q->label(r.structure_value)},
                               {"cone_meet", X.q->label(r.cone_value)},
                               {"gap", std::abs(r.cone_value - r.structure_value)}};
  }
  return j;
}

Json jiso_report_json(const VCat& X, const JIsoReport& r) {
  Json j;
  j["vcategory"] = X.name;
  j["is_iso"] = r.is_iso();
  j["finsup_bijective"] = r.finsup_bijective;
  j["lax_monoid_bijective"] = r.lax_bijective;
  j["vietoris_points"] = r.vietoris_points;
  j["finsup_morphisms"] = r.finsup_count;
  j["crisp_subsets"] = r.crisp_subsets;
  j["lax_monoid_morphisms"] = r.lax_monoid_count;
  auto values = [&](const std::vector<int>& t) {
    std::vector<std::string> out;
    for (int v : t) out.push_back(X.q->label(v));
    return out;
  };
  if (!r.finsup_witness.empty()) j["finsup_witness"] = values(r.finsup_witness);
  if (!r.lax_witness.empty()) j["lax_witness"] = values(r.lax_witness);
  return j;
}

Json relation_violations_json(const VCat& X, const LevelFamily& fam) {
  Json j;
  j["vcategory"] = X.name;
  j["reflexive"] = relations_reflexive(fam);
  j["transitive"] = relations_transitive(fam);
  j["antisymmetric_at_k"] = r_k_antisymmetric(fam);
  j["violations"] = Json::array();
  for (const auto& v : relation_violations(fam)) {
    Json e;
    e["equation"] = v.kind == 0 ? "diagonal below R_k" : "R_u;R_v below R_{u(x)v}";
    e["u"] = X.q->label(v.u);
    e["v"] = X.q->label(v.v);
    e["x"] = X.label(v.x);
    e["y"] = X.label(v.y);
    j["violations"].push_back(std::move(e));
  }
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = error_kind_name(e.kind);
  j["message"] = e.what();
  if (!e.witness.empty()) j["witness"] = e.witness;
  return j;
}

std::string format_subset(const VCat& X, const std::vector<int>& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i)
    s += X.label(points[i]) + (i + 1 < points.size() ? "," : "");
  return s + "}";
}

std::string format_value_tuple(const Quantale& q, const std::vector<int>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i)
    s += q.label(values[i]) + (i + 1 < values.size() ? "," : "");
  return s + ")";
}

}  // namespace qdw

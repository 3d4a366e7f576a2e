#ifndef QDW_IO_HPP
#define QDW_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdw/duality.hpp"
#include "qdw/encoding.hpp"
#include "qdw/ordered.hpp"
#include "qdw/priestley.hpp"
#include "qdw/vcat.hpp"

namespace qdw {

using Json = nlohmann::ordered_json;

/// Loaded documents. Names are unique per kind; every vcat references a
/// loaded quantale.
struct Workspace {
  std::map<std::string, QuantalePtr> quantales;
  std::map<std::string, VCat> vcats;
  std::map<std::string, FinPoset> posets;
  Budget budget = Budget::from_env();
  std::uint64_t seed = 1;
};

enum class DocKind { Quantale, VCategory, Poset };

/// Kind by fields: "tensor" -> quantale, "quantale" -> vcategory,
/// "leq" -> poset.
DocKind classify_document(const Json& doc);

QuantalePtr parse_quantale(const Json& doc);
VCat parse_vcat(const Json& doc, const Workspace& ws);
FinPoset parse_poset(const Json& doc);

struct LoadedDoc {
  DocKind kind;
  std::string name;
};

/// Parses and registers the documents; quantales load first so references
/// resolve in any file order. Throws Error with ParseError(file:line) on
/// malformed JSON, UnknownQuantaleRef on a missing reference, and the law
/// errors from the constructors.
std::vector<LoadedDoc> load_files(const std::vector<std::string>& paths, Workspace& ws);

// Report rendering (deterministic field order; no wall-clock content).
Json quantale_summary(const Quantale& q);
Json vcat_summary(const VCat& X);
Json priestley_report_json(const VCat& X, const PriestleyReport& r);
Json jiso_report_json(const VCat& X, const JIsoReport& r);
/// Every violated relational equation with its (u, v, x, y) witnesses.
Json relation_violations_json(const VCat& X, const LevelFamily& fam);
Json error_json(const Error& e);

std::string format_subset(const VCat& X, const std::vector<int>& points);
std::string format_value_tuple(const Quantale& q, const std::vector<int>& values);

}  // namespace qdw

#endif

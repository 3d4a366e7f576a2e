#include "qdw/common.hpp"

#include <cstdlib>

namespace qdw {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::TensorNotMonoid: return "TensorNotMonoid";
    case ErrorKind::AdjunctionFails: return "AdjunctionFails";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::NotCompletelyDistributive: return "NotCompletelyDistributive";
    case ErrorKind::ReflexivityFails: return "ReflexivityFails";
    case ErrorKind::TransitivityFails: return "TransitivityFails";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::IncompatibleFamily: return "IncompatibleFamily";
    case ErrorKind::ModuleLawViolated: return "ModuleLawViolated";
    case ErrorKind::NotLukasiewicz: return "NotLukasiewicz";
    case ErrorKind::NotUpperSet: return "NotUpperSet";
    case ErrorKind::NotAntitone: return "NotAntitone";
    case ErrorKind::NotMonotoneRelation: return "NotMonotoneRelation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownQuantaleRef: return "UnknownQuantaleRef";
    case ErrorKind::BadDocument: return "BadDocument";
  }
  return "?";
}

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("QDW_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_maps = v;
  }
  return b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  const std::uint64_t cap = 1ull << 63;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap;
    r *= base;
  }
  return r;
}

void require_budget(const Budget& b, std::uint64_t cardinality, const char* what) {
  if (cardinality > b.max_maps)
    fail(ErrorKind::SearchSpaceTooLarge,
         std::string(what) + ": search space of size " + std::to_string(cardinality) +
             " exceeds budget " + std::to_string(b.max_maps),
         {static_cast<long long>(cardinality)});
}

}  // namespace qdw

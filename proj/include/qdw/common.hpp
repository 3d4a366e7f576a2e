#ifndef QDW_COMMON_HPP
#define QDW_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdw {

enum class ErrorKind {
  NotALattice,
  TensorNotMonoid,
  AdjunctionFails,
  CarrierTooLarge,
  NotCompletelyDistributive,
  ReflexivityFails,
  TransitivityFails,
  SearchSpaceTooLarge,
  IncompatibleFamily,
  ModuleLawViolated,
  NotLukasiewicz,
  NotUpperSet,
  NotAntitone,
  NotMonotoneRelation,
  ParseError,
  UnknownQuantaleRef,
  BadDocument,
};

const char* error_kind_name(ErrorKind k);

/// Carries a structured reason plus integer witnesses (element/point indices).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg, std::vector<long long> witness = {})
      : std::runtime_error(std::move(msg)), kind(kind), witness(std::move(witness)) {}

  ErrorKind kind;
  std::vector<long long> witness;
};

[[noreturn]] inline void fail(ErrorKind k, std::string msg, std::vector<long long> w = {}) {
  throw Error(k, std::move(msg), std::move(w));
}

/// Enumeration guard. Ops that would enumerate more than `max_maps`
/// candidates refuse with SearchSpaceTooLarge instead of sampling.
struct Budget {
  std::uint64_t max_maps = 1000000;

  static Budget from_env();
};

/// |base|^exp saturated at 2^63; guards map-space enumerations.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

void require_budget(const Budget& b, std::uint64_t cardinality, const char* what);

/// SplitMix64. Deterministic across platforms; used for all random suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

/// Odometer over maps {0..m-1} -> {0..base-1} in lexicographic order of the
/// table (index 0 most significant). Returns false when exhausted.
inline bool next_map(std::vector<int>& map, int base) {
  for (int i = static_cast<int>(map.size()) - 1; i >= 0; --i) {
    if (++map[i] < base) return true;
    map[i] = 0;
  }
  return false;
}

}  // namespace qdw

#endif

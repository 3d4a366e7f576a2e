#ifndef QDW_VERIFY_HPP
#define QDW_VERIFY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "qdw/io.hpp"

namespace qdw::verify {

struct Options {
  std::uint64_t seed = 1;
  int max_size = 0;  // 0 keeps the stated instance sizes; otherwise caps them
  Budget budget = Budget::from_env();

  int cap(int size) const { return max_size > 0 ? std::min(size, max_size) : size; }
};

struct CheckResult {
  std::string name;
  bool passed = true;
  Json details;    // deterministic counts and witnesses
  double seconds = 0;  // text output only, never serialized
};

// One entry per acceptance criterion.
CheckResult check_quantale_laws(const Options&);
CheckResult check_girard(const Options&);
CheckResult check_seal_encoding(const Options&);
CheckResult check_l_closure(const Options&);
CheckResult check_cauchy(const Options&);
CheckResult check_priestley(const Options&);
CheckResult check_duality(const Options&);
CheckResult check_mu_lemma(const Options&);
CheckResult check_ordered(const Options&);

/// suite: core (criteria 1-6), duality (7-8), ordered (9), all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);
bool known_suite(const std::string& suite);

/// Byte-deterministic summary (no wall-clock content).
Json summary_json(const std::string& suite, const Options& opt, const std::vector<CheckResult>& rs);

// Deterministic random instances for the property suites.
VCat random_vcat(const QuantalePtr& q, int points, Rng& rng);
VCat random_separated_vcat(const QuantalePtr& q, int points, Rng& rng);

/// All lawful structures of the given size (diagonal entries above k,
/// every off-diagonal combination, filtered by the transitivity law).
std::vector<VCat> all_valid_vcats(const QuantalePtr& q, int points);

}  // namespace qdw::verify

#endif

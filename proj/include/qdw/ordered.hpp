#ifndef QDW_ORDERED_HPP
#define QDW_ORDERED_HPP

#include <string>
#include <vector>

#include "qdw/quantale.hpp"

namespace qdw {

/// Finite partially ordered set (reflexive, transitive, antisymmetric).
struct FinPoset {
  int n = 0;
  std::vector<char> leq_;
  std::vector<std::string> labels;
  std::string name;

  static FinPoset make(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {},
                       std::string name = {});
  bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x) * n + y] != 0; }

  bool is_upper_set(const std::vector<int>& A) const;
  std::vector<std::vector<int>> upper_sets() const;  // sorted element lists, lexicographic
};

/// Classical Vietoris: carrier = upper sets, ordered by A <= B iff B is a
/// subset of A (H of the point is the two chain with the singleton below
/// the empty set).
FinPoset vietoris_H(const FinPoset& P);

/// Direct-image up-closure action of a monotone map on upper sets; the
/// functoriality side of vietoris_H. Returns the index map H(P) -> H(Q).
std::vector<int> vietoris_H_map(const FinPoset& P, const FinPoset& Q, const std::vector<int>& f);

/// Antitone maps P -> chain (the morphisms P -> chain^op), lexicographic.
std::vector<std::vector<int>> antitone_maps(const FinPoset& P, const Quantale& chain);

/// Phi_A(psi) = max over A; empty A gives bottom. Throws NotUpperSet /
/// NotAntitone on bad input.
int phi_A(const FinPoset& P, const Quantale& chain, const std::vector<int>& A,
          const std::vector<int>& psi);

/// A nonempty and every cover by two upper sets already contains A.
bool is_irreducible(const FinPoset& P, const std::vector<int>& A);

struct IrreducibilityReport {
  bool equivalence_holds = true;  // irreducible(A) iff Phi_A is a monoid morphism
  std::vector<int> witness_A;
  std::size_t upper_sets_checked = 0;
};

/// Exhaustive check of the monoid-condition characterisation over every
/// upper set of P, against the chosen chain quantale.
IrreducibilityReport irreducibility_equivalence(const FinPoset& P, const QuantalePtr& chain);

/// Monotone relation X -|> Y: R(x) upper in Y and x <= x' implies
/// R(x') subset of R(x).
struct MonotoneRelation {
  const FinPoset* dom;
  const FinPoset* cod;
  std::vector<char> rel;  // row-major |X| x |Y|

  bool at(int x, int y) const { return rel[static_cast<std::size_t>(x) * cod->n + y] != 0; }
  bool is_monotone() const;
};

/// C R(psi)(x) = max{psi(y) : (x,y) in R}: the hemimorphism attached to a
/// monotone relation. Throws NotMonotoneRelation.
std::vector<int> hemimorphism_from_relation(const MonotoneRelation& R, const QuantalePtr& chain,
                                            const std::vector<int>& psi);

/// CR is a strict monoid morphism iff R is the graph (x, up f(x)) of a
/// monotone map; detection goes through the monoid condition.
bool function_detection(const MonotoneRelation& R, const QuantalePtr& chain);

/// Independent oracle: every R(x) is a principal upper set and the induced
/// point map is monotone.
bool is_graph_of_monotone_map(const MonotoneRelation& R);

}  // namespace qdw

#endif

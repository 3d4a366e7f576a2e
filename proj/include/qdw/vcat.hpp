#ifndef QDW_VCAT_HPP
#define QDW_VCAT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdw/quantale.hpp"

namespace qdw {

/// First violated V-category law, with witnesses.
struct LawViolation {
  ErrorKind kind;            // ReflexivityFails or TransitivityFails
  std::vector<int> witness;  // (x) or (x,y,z)
  std::string message;
};

/// Finite V-category: point set 0..m-1 with a V-valued structure matrix.
/// Constructors in this module only emit lawful structures; `make` checks.
struct VCat {
  QuantalePtr q;
  int m = 0;
  std::vector<int> a;  // row-major m*m, entries are quantale element indices
  std::vector<std::string> labels;
  std::string name;

  static VCat make(QuantalePtr q, std::vector<std::vector<int>> matrix,
                   std::vector<std::string> labels = {}, std::string name = {});
  /// Unchecked; for internal constructions that are lawful by proof.
  static VCat raw(QuantalePtr q, int m, std::vector<int> flat);

  int at(int x, int y) const { return a[static_cast<std::size_t>(x) * m + y]; }
  int& at(int x, int y) { return a[static_cast<std::size_t>(x) * m + y]; }
  const std::string& label(int x) const { return labels[x]; }

  std::optional<LawViolation> validate() const;
  bool is_valid() const { return !validate().has_value(); }
  bool is_separated() const;
  VCat dual() const;

  bool operator==(const VCat& o) const { return m == o.m && a == o.a && q == o.q; }
};

/// Non-expansive map between V-categories over a shared quantale.
struct VFun {
  VCat dom, cod;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool is_valid() const;
  bool is_injective() const;
  bool is_surjective() const;
  /// Injective and structure-exact: a(x,x') == b(fx,fx').
  bool is_embedding() const;
};

/// All V-functors X -> Y in lexicographic order of the map table.
std::vector<VFun> enumerate_vfunctors(const VCat& X, const VCat& Y,
                                      const Budget& budget = Budget::from_env());

/// The quantale as a V-category (V, hom).
VCat v_as_vcat(const QuantalePtr& q);

/// a(x,y) = meet over cone legs; empty cone gives the indiscrete structure.
VCat initial_structure(const QuantalePtr& q, int carrier_size,
                       const std::vector<std::pair<std::vector<int>, VCat>>& cone);

/// (surjection, embedding) with image carrier = distinct values of map,
/// embedding structure restricted from the codomain.
std::pair<VFun, VFun> factorize(const VFun& f);

VCat product_of(const VCat& X, const VCat& Y);
VCat coproduct_of(const VCat& X, const VCat& Y);
VCat discrete(const QuantalePtr& q, int points);
VCat indiscrete(const QuantalePtr& q, int points);

/// Quotient by (k <= a(x,y) and k <= a(y,x)); class representative = least
/// point index. Returns the quotient map and the separated codomain.
std::pair<VFun, VCat> separated_reflection(const VCat& X);

/// delta_A(x) = V_{y in A} a(y,x); always a point of the Vietoris object.
std::vector<int> delta_map(const VCat& X, const std::vector<int>& A);

}  // namespace qdw

#endif

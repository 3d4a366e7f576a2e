#ifndef QDW_DUALITY_HPP
#define QDW_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdw/vcat.hpp"

namespace qdw {

/// CX = all morphisms X -> V^op with the pointwise V^op structure
/// c(phi,psi) = /\_x hom(psi(x), phi(x)); the underlying CX-order reverses
/// the pointwise V-order. Both families of weighted operations are cached:
/// in CX's own order its bottom is the constant-top map, its binary join is
/// the pointwise meet and its copower is hom(u,-) pointwise; read in
/// pointwise V-values these are exactly the constant-bottom map, pointwise
/// join and u(x)- of the sup-side family used by the morphism predicates.
class DualObject {
 public:
  static DualObject build(const VCat& X, const Budget& budget = Budget::from_env());

  const VCat& source() const { return X_; }
  const QuantalePtr& quantale() const { return X_.q; }
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::vector<int>>& carrier() const { return carrier_; }
  const std::vector<int>& member(int i) const { return carrier_[i]; }
  /// Index of a value table in the carrier, or -1.
  int index_of(const std::vector<int>& table) const;

  /// Enriched structure c(phi,psi) = /\_x hom(psi(x), phi(x)).
  int structure(int phi, int psi) const;
  /// Underlying CX-order: phi <= psi iff psi <= phi pointwise in V.
  bool cx_leq(int phi, int psi) const;

  // Pointwise-V operations (all closed; indices into the carrier).
  int const_bot() const { return const_bot_; }   // CX-top
  int const_top() const { return const_top_; }   // CX-bottom
  int unit_const() const { return unit_const_; } // monoid neutral, constant k
  int pointwise_join(int i, int j) const { return join_[idx(i, j)]; }
  int pointwise_meet(int i, int j) const { return meet_[idx(i, j)]; }
  int tensor_scale(int u, int i) const { return tscale_[uidx(u, i)]; }  // u (x) phi
  int hom_scale(int u, int i) const { return hscale_[uidx(u, i)]; }     // hom(u, phi)
  /// Pointwise tensor of two members; -1 when the result leaves the carrier.
  int pointwise_tensor(int i, int j) const { return ptensor_[idx(i, j)]; }
  bool tensor_closed() const { return tensor_closed_; }

  /// Closure of the carrier under the six weighted operations. Always holds
  /// for a lawful quantale; reported rather than thrown so a failure shows
  /// up as data.
  bool finlat_closed() const { return closure_failure_.empty(); }
  const std::string& closure_failure() const { return closure_failure_; }

  // CX-side names for the same data (the V^op reading).
  int cx_bottom() const { return const_top_; }
  int cx_top() const { return const_bot_; }
  int cx_join(int i, int j) const { return pointwise_meet(i, j); }
  int cx_meet(int i, int j) const { return pointwise_join(i, j); }
  int cx_copower(int u, int i) const { return hom_scale(u, i); }
  int cx_power(int u, int i) const { return tensor_scale(u, i); }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * carrier_.size() + j; }
  std::size_t uidx(int u, int i) const { return static_cast<std::size_t>(u) * carrier_.size() + i; }

  VCat X_;
  std::vector<std::vector<int>> carrier_;
  int const_bot_ = -1, const_top_ = -1, unit_const_ = -1;
  std::vector<int> join_, meet_, ptensor_, tscale_, hscale_;
  bool tensor_closed_ = true;
  std::string closure_failure_;
};

/// h is a table of V-elements indexed by the carrier of CX.
/// finsup: preserves the constant-bottom map, pointwise binary joins and
/// the copowers u(x)- (read in pointwise V-values).
bool is_finsup_morphism(const DualObject& cx, const std::vector<int>& h);
/// finlat: finsup plus constant-top, pointwise meets and powers hom(u,-).
bool is_finlat_morphism(const DualObject& cx, const std::vector<int>& h);
/// Monoid morphism for the pointwise-tensor monoid with neutral constant k:
/// h(unit) = top and h(phi (x) psi) = h(phi) (x) h(psi), quantified over the
/// pairs whose pointwise tensor stays in the carrier.
bool is_monoid_morphism(const DualObject& cx, const std::vector<int>& h);
bool is_lax_monoid_morphism(const DualObject& cx, const std::vector<int>& h);

/// j(phi)(psi) = V_x psi(x) (x) phi(x), tabulated over the carrier of CX.
std::vector<int> j_map(const DualObject& cx, const std::vector<int>& phi);

/// All finsup morphisms CX -> V, each with its mate phi(x) = h(a(-,x)).
/// Exact: every member of CX is the finite join V_x psi(x)(x)a(-,x), so a
/// finsup morphism is determined by its values on the representables; the
/// decomposition is re-verified per instance.
struct FinsupMorphism {
  std::vector<int> table;  // over the carrier of CX
  std::vector<int> mate;   // candidate phi in V^X with j(phi) == table
};
std::vector<FinsupMorphism> finsup_morphisms(const DualObject& cx,
                                             const Budget& budget = Budget::from_env());

/// Test oracle: brute-force filter of all |V|^|CX| tables.
std::vector<std::vector<int>> finsup_morphisms_bruteforce(const DualObject& cx,
                                                          const Budget& budget = Budget::from_env());

struct JIsoReport {
  // Enriched comparison: j from the Vietoris points onto finsup morphisms.
  bool finsup_bijective = true;
  std::vector<int> finsup_witness;  // a finsup table outside the image, if any
  // Ordered shadow: A -> Phi_A from crisp up-closed subsets onto the
  // lax-monoid finsup morphisms.
  bool lax_bijective = true;
  std::vector<int> lax_witness;     // a lax-monoid finsup table not of Phi_A form
  std::size_t vietoris_points = 0;
  std::size_t finsup_count = 0;
  std::size_t crisp_subsets = 0;
  std::size_t lax_monoid_count = 0;

  bool is_iso() const { return finsup_bijective && lax_bijective; }
};

JIsoReport verify_j_iso(const VCat& X, const Budget& budget = Budget::from_env());

/// The enriched Vietoris object: functors X -> (V,hom) with the pointwise
/// structure /\_x hom(phi(x), phi'(x)).
VCat vietoris(const VCat& X, const Budget& budget = Budget::from_env());

/// Two-sided module X -|> Y: a_X(x,x')(x)K(x',y) <= K(x,y) and
/// a_Y(y,y')(x)K(x,y) <= K(x,y'); each row K(x,-) is a Vietoris point of Y.
struct KleisliMap {
  const VCat* dom;
  const VCat* cod;
  std::vector<int> table;  // row-major |X| x |Y|

  int at(int x, int y) const { return table[static_cast<std::size_t>(x) * cod->m + y]; }
  bool is_valid() const;
};

KleisliMap kleisli_identity(const VCat& X);
KleisliMap kleisli_compose(const KleisliMap& phi, const KleisliMap& psi);
/// C on a Kleisli morphism: the index table of CY -> CX,
/// psi |-> V_y psi(y)(x)K(-,y).
std::vector<int> kleisli_action(const KleisliMap& k, const DualObject& cy, const DualObject& cx);

/// Precomposition phi |-> phi . f as an index map CX -> CY.
std::vector<int> contravariant_action(const VFun& f, const DualObject& cx, const DualObject& cy);

/// Hemimorphism predicate between dual objects: preserves constants,
/// pointwise joins/meets and both scale families (finlat, target CY).
bool is_finlat_hemimorphism(const DualObject& cx, const DualObject& cy, const std::vector<int>& h);

struct FullFaithfulnessReport {
  bool faithful = true;  // distinct functors get distinct actions
  bool full = true;      // every finlat morphism is an action
  std::size_t hom_count = 0;
  std::size_t finlat_count = 0;
  std::vector<std::vector<int>> witness;  // a finlat morphism outside the image (tables over CX)

  bool ok() const { return faithful && full; }
};

/// Checks {functors Y -> X} -> {finlat morphisms CX -> CY} is a bijection.
FullFaithfulnessReport verify_full_faithfulness(const VCat& X, const VCat& Y,
                                                const Budget& budget = Budget::from_env());

/// All finlat morphisms CX -> CY as index tables (h[i] = index in CY).
std::vector<std::vector<int>> finlat_morphisms(const DualObject& cx, const DualObject& cy,
                                               const Budget& budget = Budget::from_env());

// --- closed subcategories of V^X and the induced-convergence monad ---
// Restricted to Lukasiewicz chains (k = top, Girard).

/// Maps X -> V as value tables; R is a sorted set of such tables.
using FnSet = std::vector<std::vector<int>>;

/// Closes seed under constants, pointwise binary join/meet, u(x)- and
/// hom(u,-) to a fixpoint.
FnSet closed_subcategory(const VCat& X, const FnSet& seed);

/// a~(y,x) = /\{phi(x) : phi in R, phi(y) = top}.
VCat induced_structure(const VCat& X, const FnSet& R);

/// mu(alpha) = /\{phi in R : alpha <= phi}.
std::vector<int> mu_from_R(const VCat& X, const FnSet& R, const std::vector<int>& alpha);

struct MuReport {
  bool induced_reproduces_structure = true;  // R = all functors gives back a
  bool mu_char_formula = true;               // mu(chi_A)(x) = V_{y in A} a(y,x)
  bool lemma_two_sided = true;               // /\{phi(x): phi|_A = top} = V_{y in A} a~(y,x)
  bool closed_sets_determined = true;        // equal induced structures => equal R
  bool girard_density = true;                // every Vietoris point is a meet of bot-complements of CX
  bool ok() const {
    return induced_reproduces_structure && mu_char_formula && lemma_two_sided &&
           closed_sets_determined && girard_density;
  }
};

/// Runs the finite shadows of the convergence-vs-closed-subcategory facts.
/// exhaustive_closed: also enumerates every closed subcategory of V^X and
/// checks injectivity of the induced structure (costs 2^(|V|^|X|) seeds).
MuReport mu_formula_check(const VCat& X, bool exhaustive_closed,
                          const Budget& budget = Budget::from_env());

}  // namespace qdw

#endif

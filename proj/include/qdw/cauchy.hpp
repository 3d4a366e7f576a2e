#ifndef QDW_CAUCHY_HPP
#define QDW_CAUCHY_HPP

#include <utility>
#include <vector>

#include "qdw/vcat.hpp"

namespace qdw {

/// Distributor pair 1 -|> X (phi) and X -|> 1 (psi). Module laws:
///   V_x' a(x',x) (x) phi(x')  <=  phi(x)
///   V_x' psi(x') (x) a(x,x')  <=  psi(x)
struct PresheafPair {
  std::vector<int> phi, psi;
};

bool module_laws_hold(const VCat& X, const PresheafPair& p);

/// Unit k <= V_x phi(x)(x)psi(x) and counit phi(x)(x)psi(y) <= a(y,x).
/// Throws ModuleLawViolated when the module laws fail.
bool is_left_adjoint_pair(const VCat& X, const PresheafPair& p);

/// phi = a(x0,-), psi = a(-,x0).
PresheafPair representable_pair(const VCat& X, int x0);

/// All adjoint pairs, ordered lexicographically by (phi, psi).
std::vector<PresheafPair> enumerate_adjoint_pairs(const VCat& X,
                                                  const Budget& budget = Budget::from_env());

/// Theorem criterion: phi is a left adjoint distributor iff
/// [phi,-]: phi' |-> /\_x hom(phi(x), phi'(x)) preserves the bottom, binary
/// suprema and copowers of the presheaf V-category of all functors X -> V.
bool left_adjoint_by_colimit_criterion(const VCat& X, const std::vector<int>& phi,
                                       const Budget& budget = Budget::from_env());

/// {x : all functor pairs X -> (V,hom) agreeing on M agree at x}.
std::vector<int> l_closure(const VCat& X, const std::vector<int>& M,
                           const Budget& budget = Budget::from_env());

/// Same closure computed against every separated codomain with at most
/// max_codomain_size points (the Lemma equivalence oracle; slow).
std::vector<int> l_closure_all_codomains(const VCat& X, const std::vector<int>& M,
                                         int max_codomain_size,
                                         const Budget& budget = Budget::from_env());

bool is_dense(const VFun& f, const Budget& budget = Budget::from_env());
bool is_closed_embedding(const VFun& f, const Budget& budget = Budget::from_env());
/// Right-cancellation against all pairs cod -> (V,hom). Separated dom/cod.
bool is_epi_sep(const VFun& f, const Budget& budget = Budget::from_env());
/// Joint equalizer of all pairs into (V,hom) that agree on the image
/// (realizing the search over (V,hom)-powers). Separated dom/cod.
bool is_regmono_sep(const VFun& f, const Budget& budget = Budget::from_env());

struct Completion {
  VCat completed;          // carrier = adjoint pairs
  VFun yoneda;             // x |-> representable pair
  std::vector<PresheafPair> points;
};

/// Carrier = adjoint pairs, d((phi,psi),(phi',psi')) = V_x phi(x)(x)psi'(x).
Completion cauchy_completion(const VCat& X, const Budget& budget = Budget::from_env());

/// Every adjoint pair is equivalent (mutual distance >= k) to a representable.
bool is_cauchy_complete(const VCat& X, const Budget& budget = Budget::from_env());

}  // namespace qdw

#endif

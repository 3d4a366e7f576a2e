#ifndef QDW_PRIESTLEY_HPP
#define QDW_PRIESTLEY_HPP

#include <utility>
#include <vector>

#include "qdw/vcat.hpp"

namespace qdw {

/// The quantale carrier with structure hom°(u,v) = hom(v,u); the dualizing
/// object of the Priestley cone. The cone into V (not V^op) is a different
/// cone and never defines the Priestley property here.
VCat vop_object(const QuantalePtr& q);

struct PriestleyReport {
  bool point_separating = true;
  std::pair<int, int> separation_witness{-1, -1};  // indistinguishable pair
  bool initial = true;
  int worst_x = -1, worst_y = -1;       // pair with the largest initiality gap
  int structure_value = -1;             // a(x,y) there
  int cone_value = -1;                  // /\_phi hom(phi(y), phi(x)) there
  std::size_t cone_size = 0;

  bool ok() const { return point_separating && initial; }
};

/// Cone = all functors X -> V^op; point-separating and initial test.
PriestleyReport is_priestley(const VCat& X, const Budget& budget = Budget::from_env());

/// (surjective, initial monocone) factorization of the cone into V^op:
/// quotient by the cone kernel, structure initial from the factored legs.
std::pair<VFun, VCat> reflect_pi0(const VCat& X, const Budget& budget = Budget::from_env());

}  // namespace qdw

#endif

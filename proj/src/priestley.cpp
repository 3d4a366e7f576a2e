#include "qdw/priestley.hpp"

#include <algorithm>
#include <cstdlib>

namespace qdw {

VCat vop_object(const QuantalePtr& q) {
  VCat V = v_as_vcat(q).dual();
  V.name = "V^op";
  return V;
}

PriestleyReport is_priestley(const VCat& X, const Budget& budget) {
  const auto& q = *X.q;
  auto cone = enumerate_vfunctors(X, vop_object(X.q), budget);
  PriestleyReport r;
  r.cone_size = cone.size();
  for (int x = 0; x < X.m && r.point_separating; ++x)
    for (int y = x + 1; y < X.m && r.point_separating; ++y) {
      bool separated = false;
      for (const auto& phi : cone)
        if (phi.map[x] != phi.map[y]) {
          separated = true;
          break;
        }
      if (!separated) {
        r.point_separating = false;
        r.separation_witness = {x, y};
      }
    }
  int worst_gap = -1;
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < X.m; ++y) {
      int acc = q.top();
      for (const auto& phi : cone) acc = q.meet(acc, q.hom(phi.map[y], phi.map[x]));
      if (acc != X.at(x, y)) {
        r.initial = false;
        int gap = std::abs(acc - X.at(x, y));
        if (gap > worst_gap) {
          worst_gap = gap;
          r.worst_x = x;
          r.worst_y = y;
          r.structure_value = X.at(x, y);
          r.cone_value = acc;
        }
      }
    }
  return r;
}

std::pair<VFun, VCat> reflect_pi0(const VCat& X, const Budget& budget) {
  auto cone = enumerate_vfunctors(X, vop_object(X.q), budget);
  // Kernel of the cone: x ~ y iff every leg agrees.
  std::vector<int> rep(X.m, -1);
  for (int x = 0; x < X.m; ++x) {
    if (rep[x] >= 0) continue;
    rep[x] = x;
    for (int y = x + 1; y < X.m; ++y) {
      if (rep[y] >= 0) continue;
      bool same = true;
      for (const auto& phi : cone)
        if (phi.map[x] != phi.map[y]) {
          same = false;
          break;
        }
      if (same) rep[y] = x;
    }
  }
  std::vector<int> reps;
  for (int x = 0; x < X.m; ++x)
    if (rep[x] == x) reps.push_back(x);
  const int m = static_cast<int>(reps.size());
  std::vector<int> cls(X.m);
  for (int x = 0; x < X.m; ++x)
    cls[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());

  // Initial structure from the factored legs (not inherited pointwise).
  const auto& q = *X.q;
  VCat P = VCat::raw(X.q, m, std::vector<int>(static_cast<std::size_t>(m) * m, q.top()));
  for (int i = 0; i < m; ++i) {
    P.labels[i] = X.label(reps[i]);
    for (int j = 0; j < m; ++j) {
      int acc = q.top();
      for (const auto& phi : cone) acc = q.meet(acc, q.hom(phi.map[reps[j]], phi.map[reps[i]]));
      P.at(i, j) = acc;
    }
  }
  return {VFun{X, P, std::move(cls)}, P};
}

}  // namespace qdw

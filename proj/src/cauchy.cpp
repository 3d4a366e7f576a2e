#include "qdw/cauchy.hpp"

#include <algorithm>
#include <map>

namespace qdw {

namespace {

// Functors X -> (V,hom) as value tables, lexicographic.
std::vector<std::vector<int>> presheaf_points(const VCat& X, const Budget& budget) {
  VCat V = v_as_vcat(X.q);
  auto fs = enumerate_vfunctors(X, V, budget);
  std::vector<std::vector<int>> out;
  out.reserve(fs.size());
  for (auto& f : fs) out.push_back(f.map);
  return out;
}

}  // namespace

bool module_laws_hold(const VCat& X, const PresheafPair& p) {
  const auto& q = *X.q;
  for (int x = 0; x < X.m; ++x) {
    int lhs_phi = q.bot(), lhs_psi = q.bot();
    for (int x2 = 0; x2 < X.m; ++x2) {
      lhs_phi = q.join(lhs_phi, q.tensor(X.at(x2, x), p.phi[x2]));
      lhs_psi = q.join(lhs_psi, q.tensor(p.psi[x2], X.at(x, x2)));
    }
    if (!q.leq(lhs_phi, p.phi[x]) || !q.leq(lhs_psi, p.psi[x])) return false;
  }
  return true;
}

bool is_left_adjoint_pair(const VCat& X, const PresheafPair& p) {
  if (!module_laws_hold(X, p))
    fail(ErrorKind::ModuleLawViolated, "presheaf pair violates the module laws");
  const auto& q = *X.q;
  int unit = q.bot();
  for (int x = 0; x < X.m; ++x) unit = q.join(unit, q.tensor(p.phi[x], p.psi[x]));
  if (!q.leq(q.unit(), unit)) return false;
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < X.m; ++y)
      if (!q.leq(q.tensor(p.phi[x], p.psi[y]), X.at(y, x))) return false;
  return true;
}

PresheafPair representable_pair(const VCat& X, int x0) {
  PresheafPair p;
  p.phi.resize(X.m);
  p.psi.resize(X.m);
  for (int x = 0; x < X.m; ++x) {
    p.phi[x] = X.at(x0, x);
    p.psi[x] = X.at(x, x0);
  }
  return p;
}

std::vector<PresheafPair> enumerate_adjoint_pairs(const VCat& X, const Budget& budget) {
  auto phis = presheaf_points(X, budget);             // module maps for phi
  auto psis = presheaf_points(X.dual(), budget);      // and for psi
  require_budget(budget, static_cast<std::uint64_t>(phis.size()) * psis.size(),
                 "enumerate_adjoint_pairs");
  std::vector<PresheafPair> out;
  for (const auto& phi : phis)
    for (const auto& psi : psis) {
      PresheafPair p{phi, psi};
      if (is_left_adjoint_pair(X, p)) out.push_back(std::move(p));
    }
  return out;
}

bool left_adjoint_by_colimit_criterion(const VCat& X, const std::vector<int>& phi,
                                       const Budget& budget) {
  const auto& q = *X.q;
  auto pts = presheaf_points(X, budget);
  auto bracket = [&](const std::vector<int>& f) {
    int acc = q.top();
    for (int x = 0; x < X.m; ++x) acc = q.meet(acc, q.hom(phi[x], f[x]));
    return acc;
  };
  // Bottom presheaf (empty supremum).
  std::vector<int> bottom(X.m, q.bot());
  if (bracket(bottom) != q.bot()) return false;
  // Binary suprema (pointwise joins stay presheaves).
  for (const auto& f : pts)
    for (const auto& g : pts) {
      std::vector<int> j(X.m);
      for (int x = 0; x < X.m; ++x) j[x] = q.join(f[x], g[x]);
      if (bracket(j) != q.join(bracket(f), bracket(g))) return false;
    }
  // Copowers u (x) f.
  for (int u = 0; u < q.size(); ++u)
    for (const auto& f : pts) {
      std::vector<int> c(X.m);
      for (int x = 0; x < X.m; ++x) c[x] = q.tensor(u, f[x]);
      if (bracket(c) != q.tensor(u, bracket(f))) return false;
    }
  return true;
}

std::vector<int> l_closure(const VCat& X, const std::vector<int>& M, const Budget& budget) {
  auto pts = presheaf_points(X, budget);
  // Group functors by restriction to M; x is in the closure iff no group
  // contains two functors that differ at x.
  std::map<std::vector<int>, std::vector<const std::vector<int>*>> groups;
  for (const auto& f : pts) {
    std::vector<int> key;
    key.reserve(M.size());
    for (int x : M) key.push_back(f[x]);
    groups[key].push_back(&f);
  }
  std::vector<int> closure;
  for (int x = 0; x < X.m; ++x) {
    bool inside = true;
    for (const auto& [key, fs] : groups) {
      for (std::size_t i = 1; i < fs.size() && inside; ++i)
        if ((*fs[i])[x] != (*fs[0])[x]) inside = false;
      if (!inside) break;
    }
    if (inside) closure.push_back(x);
  }
  return closure;
}

std::vector<int> l_closure_all_codomains(const VCat& X, const std::vector<int>& M,
                                         int max_codomain_size, const Budget& budget) {
  const auto& q = X.q;
  std::vector<char> in_closure(X.m, 1);
  // Enumerate all separated codomains up to the bound and all functor pairs.
  for (int msize = 1; msize <= max_codomain_size; ++msize) {
    const int n = q->size();
    std::vector<int> offdiag(static_cast<std::size_t>(msize) * msize - msize, 0);
    require_budget(budget, checked_pow(n, offdiag.size()), "l_closure_all_codomains");
    do {
      VCat Y = VCat::raw(q, msize, std::vector<int>(static_cast<std::size_t>(msize) * msize));
      std::size_t pos = 0;
      for (int x = 0; x < msize; ++x)
        for (int y = 0; y < msize; ++y) Y.at(x, y) = (x == y) ? -1 : offdiag[pos++];
      for (int x = 0; x < msize; ++x) {
        // Diagonal must dominate k; smallest lawful choice is k itself, but
        // any reflexive value can matter, so scan them all.
        Y.at(x, x) = q->unit();
      }
      // All diagonal assignments with a(x,x) >= k.
      std::vector<int> diag_choices;
      for (int v = 0; v < n; ++v)
        if (q->leq(q->unit(), v)) diag_choices.push_back(v);
      std::vector<int> diag(msize, 0);
      do {
        for (int x = 0; x < msize; ++x) Y.at(x, x) = diag_choices[diag[x]];
        if (Y.is_valid() && Y.is_separated()) {
          auto fs = enumerate_vfunctors(X, Y, budget);
          std::map<std::vector<int>, std::vector<const std::vector<int>*>> groups;
          for (const auto& f : fs) {
            std::vector<int> key;
            for (int x : M) key.push_back(f.map[x]);
            groups[key].push_back(&f.map);
          }
          for (int x = 0; x < X.m; ++x) {
            if (!in_closure[x]) continue;
            for (const auto& [key, maps] : groups) {
              bool same = true;
              for (std::size_t i = 1; i < maps.size() && same; ++i)
                if ((*maps[i])[x] != (*maps[0])[x]) same = false;
              if (!same) {
                in_closure[x] = 0;
                break;
              }
            }
          }
        }
      } while (next_map(diag, static_cast<int>(diag_choices.size())));
    } while (next_map(offdiag, q->size()));
  }
  std::vector<int> closure;
  for (int x = 0; x < X.m; ++x)
    if (in_closure[x]) closure.push_back(x);
  return closure;
}

bool is_dense(const VFun& f, const Budget& budget) {
  std::vector<int> image;
  for (int v : f.map) image.push_back(v);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return static_cast<int>(l_closure(f.cod, image, budget).size()) == f.cod.m;
}

bool is_closed_embedding(const VFun& f, const Budget& budget) {
  if (!f.is_embedding()) return false;
  std::vector<int> image;
  for (int v : f.map) image.push_back(v);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return l_closure(f.cod, image, budget) == image;
}

bool is_epi_sep(const VFun& f, const Budget& budget) {
  auto pts = presheaf_points(f.cod, budget);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool agree_on_image = true;
      for (int x = 0; x < f.dom.m && agree_on_image; ++x)
        if (pts[i][f.map[x]] != pts[j][f.map[x]]) agree_on_image = false;
      if (agree_on_image) return false;  // u.f == v.f with u != v
    }
  return true;
}

bool is_regmono_sep(const VFun& f, const Budget& budget) {
  if (!f.is_embedding()) return false;
  auto pts = presheaf_points(f.cod, budget);
  // Joint equalizer of every pair u,v: cod -> (V,hom) with u.f == v.f;
  // equivalently of the single pair into the corresponding power of V.
  std::vector<char> in_eq(f.cod.m, 1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool agree_on_image = true;
      for (int x = 0; x < f.dom.m && agree_on_image; ++x)
        if (pts[i][f.map[x]] != pts[j][f.map[x]]) agree_on_image = false;
      if (!agree_on_image) continue;
      for (int y = 0; y < f.cod.m; ++y)
        if (pts[i][y] != pts[j][y]) in_eq[y] = 0;
    }
  std::vector<int> image;
  for (int v : f.map) image.push_back(v);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> eq;
  for (int y = 0; y < f.cod.m; ++y)
    if (in_eq[y]) eq.push_back(y);
  return eq == image;
}

Completion cauchy_completion(const VCat& X, const Budget& budget) {
  Completion c;
  c.points = enumerate_adjoint_pairs(X, budget);
  const int m = static_cast<int>(c.points.size());
  const auto& q = *X.q;
  VCat C = VCat::raw(X.q, m, std::vector<int>(static_cast<std::size_t>(m) * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int d = q.bot();
      for (int x = 0; x < X.m; ++x) d = q.join(d, q.tensor(c.points[i].phi[x], c.points[j].psi[x]));
      C.at(i, j) = d;
    }
  std::vector<int> yon(X.m);
  for (int x = 0; x < X.m; ++x) {
    PresheafPair r = representable_pair(X, x);
    auto it = std::find_if(c.points.begin(), c.points.end(), [&](const PresheafPair& p) {
      return p.phi == r.phi && p.psi == r.psi;
    });
    yon[x] = static_cast<int>(it - c.points.begin());
  }
  c.completed = std::move(C);
  c.yoneda = VFun{X, c.completed, std::move(yon)};
  return c;
}

bool is_cauchy_complete(const VCat& X, const Budget& budget) {
  auto pairs = enumerate_adjoint_pairs(X, budget);
  const auto& q = *X.q;
  for (const auto& p : pairs) {
    bool represented = false;
    for (int x = 0; x < X.m && !represented; ++x) {
      PresheafPair r = representable_pair(X, x);
      // Mutual distance >= k in the completion structure.
      int d1 = q.bot(), d2 = q.bot();
      for (int y = 0; y < X.m; ++y) {
        d1 = q.join(d1, q.tensor(p.phi[y], r.psi[y]));
        d2 = q.join(d2, q.tensor(r.phi[y], p.psi[y]));
      }
      if (q.leq(q.unit(), d1) && q.leq(q.unit(), d2)) represented = true;
    }
    if (!represented) return false;
  }
  return true;
}

}  // namespace qdw

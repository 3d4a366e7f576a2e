#include "qdw/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qdw/priestley.hpp"

namespace qdw {

DualObject DualObject::build(const VCat& X, const Budget& budget) {
  DualObject d;
  d.X_ = X;
  const auto& q = *X.q;
  auto cone = enumerate_vfunctors(X, vop_object(X.q), budget);
  for (auto& f : cone) d.carrier_.push_back(std::move(f.map));
  std::sort(d.carrier_.begin(), d.carrier_.end());
  const int n = static_cast<int>(d.carrier_.size());

  auto find = [&](const std::vector<int>& t) {
    auto it = std::lower_bound(d.carrier_.begin(), d.carrier_.end(), t);
    if (it == d.carrier_.end() || *it != t) return -1;
    return static_cast<int>(it - d.carrier_.begin());
  };

  d.const_bot_ = find(std::vector<int>(X.m, q.bot()));
  d.const_top_ = find(std::vector<int>(X.m, q.top()));
  d.unit_const_ = find(std::vector<int>(X.m, q.unit()));

  d.join_.assign(static_cast<std::size_t>(n) * n, -1);
  d.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  d.ptensor_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> jn(X.m), mt(X.m), tn(X.m);
      for (int x = 0; x < X.m; ++x) {
        jn[x] = q.join(d.carrier_[i][x], d.carrier_[j][x]);
        mt[x] = q.meet(d.carrier_[i][x], d.carrier_[j][x]);
        tn[x] = q.tensor(d.carrier_[i][x], d.carrier_[j][x]);
      }
      d.join_[d.idx(i, j)] = find(jn);
      d.meet_[d.idx(i, j)] = find(mt);
      d.ptensor_[d.idx(i, j)] = find(tn);
      if (d.ptensor_[d.idx(i, j)] < 0) d.tensor_closed_ = false;
    }
  d.tscale_.assign(static_cast<std::size_t>(q.size()) * n, -1);
  d.hscale_.assign(static_cast<std::size_t>(q.size()) * n, -1);
  for (int u = 0; u < q.size(); ++u)
    for (int i = 0; i < n; ++i) {
      std::vector<int> ts(X.m), hs(X.m);
      for (int x = 0; x < X.m; ++x) {
        ts[x] = q.tensor(u, d.carrier_[i][x]);
        hs[x] = q.hom(u, d.carrier_[i][x]);
      }
      d.tscale_[d.uidx(u, i)] = find(ts);
      d.hscale_[d.uidx(u, i)] = find(hs);
    }

  // Closure under the six weighted operations. A failure would signal a
  // quantale for which CX is not FinLat-closed; it is recorded, not thrown.
  auto check = [&](int v, const char* op) {
    if (v < 0 && d.closure_failure_.empty()) d.closure_failure_ = op;
  };
  check(d.const_bot_, "bottom");
  check(d.const_top_, "top");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      check(d.join_[d.idx(i, j)], "join");
      check(d.meet_[d.idx(i, j)], "meet");
    }
  for (int u = 0; u < q.size(); ++u)
    for (int i = 0; i < n; ++i) {
      check(d.tscale_[d.uidx(u, i)], "copower");
      check(d.hscale_[d.uidx(u, i)], "power");
    }
  return d;
}

int DualObject::index_of(const std::vector<int>& table) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), table);
  if (it == carrier_.end() || *it != table) return -1;
  return static_cast<int>(it - carrier_.begin());
}

int DualObject::structure(int phi, int psi) const {
  const auto& q = *X_.q;
  int acc = q.top();
  for (int x = 0; x < X_.m; ++x) acc = q.meet(acc, q.hom(carrier_[psi][x], carrier_[phi][x]));
  return acc;
}

bool DualObject::cx_leq(int phi, int psi) const {
  for (int x = 0; x < X_.m; ++x)
    if (!X_.q->leq(carrier_[psi][x], carrier_[phi][x])) return false;
  return true;
}

bool is_finsup_morphism(const DualObject& cx, const std::vector<int>& h) {
  const auto& q = *cx.quantale();
  const int n = cx.size();
  if (!cx.finlat_closed()) return false;
  if (h[cx.const_bot()] != q.bot()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h[cx.pointwise_join(i, j)] != q.join(h[i], h[j])) return false;
  for (int u = 0; u < q.size(); ++u)
    for (int i = 0; i < n; ++i)
      if (h[cx.tensor_scale(u, i)] != q.tensor(u, h[i])) return false;
  return true;
}

bool is_finlat_morphism(const DualObject& cx, const std::vector<int>& h) {
  if (!is_finsup_morphism(cx, h)) return false;
  const auto& q = *cx.quantale();
  const int n = cx.size();
  if (h[cx.const_top()] != q.top()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h[cx.pointwise_meet(i, j)] != q.meet(h[i], h[j])) return false;
  for (int u = 0; u < q.size(); ++u)
    for (int i = 0; i < n; ++i)
      if (h[cx.hom_scale(u, i)] != q.hom(u, h[i])) return false;
  return true;
}

bool is_monoid_morphism(const DualObject& cx, const std::vector<int>& h) {
  const auto& q = *cx.quantale();
  if (cx.unit_const() < 0 || h[cx.unit_const()] != q.top()) return false;
  for (int i = 0; i < cx.size(); ++i)
    for (int j = 0; j < cx.size(); ++j) {
      int t = cx.pointwise_tensor(i, j);
      if (t >= 0 && h[t] != q.tensor(h[i], h[j])) return false;
    }
  return true;
}

bool is_lax_monoid_morphism(const DualObject& cx, const std::vector<int>& h) {
  const auto& q = *cx.quantale();
  for (int i = 0; i < cx.size(); ++i)
    for (int j = 0; j < cx.size(); ++j) {
      int t = cx.pointwise_tensor(i, j);
      if (t >= 0 && !q.leq(h[t], q.tensor(h[i], h[j]))) return false;
    }
  return true;
}

std::vector<int> j_map(const DualObject& cx, const std::vector<int>& phi) {
  const auto& q = *cx.quantale();
  const VCat& X = cx.source();
  std::vector<int> h(cx.size());
  for (int i = 0; i < cx.size(); ++i) {
    int acc = q.bot();
    for (int x = 0; x < X.m; ++x) acc = q.join(acc, q.tensor(cx.member(i)[x], phi[x]));
    h[i] = acc;
  }
  return h;
}

namespace {

// sigma_x = a(-,x), always a member of CX.
std::vector<int> representable_in_cx(const VCat& X, int x) {
  std::vector<int> s(X.m);
  for (int y = 0; y < X.m; ++y) s[y] = X.at(y, x);
  return s;
}

// Every psi in CX is V_x psi(x) (x) sigma_x; the decomposition behind the
// exactness of finsup_morphisms. Returns false if it ever failed.
bool verify_decomposition(const DualObject& cx) {
  const VCat& X = cx.source();
  const auto& q = *X.q;
  for (int i = 0; i < cx.size(); ++i) {
    std::vector<int> acc(X.m, q.bot());
    for (int x = 0; x < X.m; ++x) {
      auto s = representable_in_cx(X, x);
      for (int y = 0; y < X.m; ++y)
        acc[y] = q.join(acc[y], q.tensor(cx.member(i)[x], s[y]));
    }
    if (acc != cx.member(i)) return false;
  }
  return true;
}

}  // namespace

std::vector<FinsupMorphism> finsup_morphisms(const DualObject& cx, const Budget& budget) {
  const VCat& X = cx.source();
  const auto& q = *X.q;
  if (!cx.finlat_closed())
    fail(ErrorKind::BadDocument, "dual object not finlat-closed under " + cx.closure_failure());
  if (!verify_decomposition(cx))
    fail(ErrorKind::BadDocument, "representable decomposition failed; dual object is inconsistent");
  require_budget(budget, checked_pow(q.size(), X.m), "finsup_morphisms");
  std::vector<FinsupMorphism> out;
  std::set<std::vector<int>> seen;
  std::vector<int> phi(X.m, 0);
  do {
    auto h = j_map(cx, phi);
    if (seen.insert(h).second && is_finsup_morphism(cx, h)) out.push_back({h, phi});
  } while (next_map(phi, q.size()));
  std::sort(out.begin(), out.end(),
            [](const FinsupMorphism& a, const FinsupMorphism& b) { return a.table < b.table; });
  return out;
}

std::vector<std::vector<int>> finsup_morphisms_bruteforce(const DualObject& cx, const Budget& budget) {
  const auto& q = *cx.quantale();
  require_budget(budget, checked_pow(q.size(), cx.size()), "finsup_morphisms_bruteforce");
  std::vector<std::vector<int>> out;
  std::vector<int> h(cx.size(), 0);
  do {
    if (is_finsup_morphism(cx, h)) out.push_back(h);
  } while (next_map(h, q.size()));
  return out;
}

namespace {

// Crisp up-closed subsets: those A whose k-valued indicator is a Vietoris
// point of X.
std::vector<std::vector<int>> crisp_subsets(const VCat& X) {
  if (X.m > 20) fail(ErrorKind::CarrierTooLarge, "crisp subset enumeration limited to 20 points");
  const auto& q = *X.q;
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << X.m); ++mask) {
    std::vector<int> chi(X.m, q.bot());
    std::vector<int> A;
    for (int x = 0; x < X.m; ++x)
      if (mask & (1u << x)) {
        chi[x] = q.unit();
        A.push_back(x);
      }
    bool functor = true;
    for (int x = 0; x < X.m && functor; ++x)
      for (int y = 0; y < X.m && functor; ++y)
        if (!q.leq(q.tensor(X.at(x, y), chi[x]), chi[y])) functor = false;
    if (functor) out.push_back(std::move(A));
  }
  return out;
}

}  // namespace

JIsoReport verify_j_iso(const VCat& X, const Budget& budget) {
  JIsoReport r;
  const auto& q = *X.q;
  DualObject cx = DualObject::build(X, budget);
  auto fins = finsup_morphisms(cx, budget);
  r.finsup_count = fins.size();

  // Enriched side: j restricted to Vietoris points must hit every finsup
  // morphism exactly once.
  VCat V = v_as_vcat(X.q);
  auto vx = enumerate_vfunctors(X, V, budget);
  r.vietoris_points = vx.size();
  std::set<std::vector<int>> image;
  for (const auto& f : vx) {
    auto h = j_map(cx, f.map);
    if (!image.insert(h).second) r.finsup_bijective = false;  // j not injective
  }
  for (const auto& fm : fins)
    if (!image.count(fm.table)) {
      r.finsup_bijective = false;
      r.finsup_witness = fm.table;
    }
  if (image.size() != fins.size()) r.finsup_bijective = false;

  // Ordered shadow: A |-> Phi_A onto the lax-monoid finsup morphisms.
  auto subsets = crisp_subsets(X);
  r.crisp_subsets = subsets.size();
  std::set<std::vector<int>> phi_image;
  for (const auto& A : subsets) {
    std::vector<int> h(cx.size());
    for (int i = 0; i < cx.size(); ++i) {
      int acc = q.bot();
      for (int x : A) acc = q.join(acc, cx.member(i)[x]);
      h[i] = acc;
    }
    if (!phi_image.insert(h).second) r.lax_bijective = false;
  }
  std::size_t lax_count = 0;
  for (const auto& fm : fins)
    if (is_lax_monoid_morphism(cx, fm.table)) {
      ++lax_count;
      if (!phi_image.count(fm.table)) {
        r.lax_bijective = false;
        r.lax_witness = fm.table;
      }
    }
  r.lax_monoid_count = lax_count;
  for (const auto& h : phi_image)
    if (!is_lax_monoid_morphism(cx, h) || !is_finsup_morphism(cx, h)) r.lax_bijective = false;
  if (phi_image.size() != lax_count) r.lax_bijective = false;
  return r;
}

VCat vietoris(const VCat& X, const Budget& budget) {
  const auto& q = *X.q;
  auto fs = enumerate_vfunctors(X, v_as_vcat(X.q), budget);
  std::vector<std::vector<int>> pts;
  for (auto& f : fs) pts.push_back(std::move(f.map));
  std::sort(pts.begin(), pts.end());
  const int n = static_cast<int>(pts.size());
  VCat V = VCat::raw(X.q, n, std::vector<int>(static_cast<std::size_t>(n) * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = q.top();
      for (int x = 0; x < X.m; ++x) acc = q.meet(acc, q.hom(pts[i][x], pts[j][x]));
      V.at(i, j) = acc;
    }
  V.name = "V(" + X.name + ")";
  return V;
}

bool KleisliMap::is_valid() const {
  const auto& q = *dom->q;
  for (int x = 0; x < dom->m; ++x)
    for (int x2 = 0; x2 < dom->m; ++x2)
      for (int y = 0; y < cod->m; ++y)
        if (!q.leq(q.tensor(dom->at(x, x2), at(x2, y)), at(x, y))) return false;
  for (int x = 0; x < dom->m; ++x)
    for (int y = 0; y < cod->m; ++y)
      for (int y2 = 0; y2 < cod->m; ++y2)
        if (!q.leq(q.tensor(cod->at(y, y2), at(x, y)), at(x, y2))) return false;
  return true;
}

KleisliMap kleisli_identity(const VCat& X) {
  return KleisliMap{&X, &X, X.a};
}

KleisliMap kleisli_compose(const KleisliMap& phi, const KleisliMap& psi) {
  const auto& q = *phi.dom->q;
  KleisliMap r{phi.dom, psi.cod, {}};
  r.table.assign(static_cast<std::size_t>(phi.dom->m) * psi.cod->m, q.bot());
  for (int x = 0; x < phi.dom->m; ++x)
    for (int z = 0; z < psi.cod->m; ++z) {
      int acc = q.bot();
      for (int y = 0; y < phi.cod->m; ++y) acc = q.join(acc, q.tensor(phi.at(x, y), psi.at(y, z)));
      r.table[static_cast<std::size_t>(x) * psi.cod->m + z] = acc;
    }
  return r;
}

std::vector<int> kleisli_action(const KleisliMap& k, const DualObject& cy, const DualObject& cx) {
  const auto& q = *k.dom->q;
  std::vector<int> out(cy.size());
  for (int p = 0; p < cy.size(); ++p) {
    std::vector<int> t(k.dom->m, q.bot());
    for (int x = 0; x < k.dom->m; ++x)
      for (int y = 0; y < k.cod->m; ++y)
        t[x] = q.join(t[x], q.tensor(cy.member(p)[y], k.at(x, y)));
    int i = cx.index_of(t);
    if (i < 0) fail(ErrorKind::BadDocument, "kleisli action left the dual carrier");
    out[p] = i;
  }
  return out;
}

bool is_finlat_hemimorphism(const DualObject& cx, const DualObject& cy, const std::vector<int>& h) {
  const int n = cx.size();
  const int q = cx.quantale()->size();
  if (h[cx.const_bot()] != cy.const_bot() || h[cx.const_top()] != cy.const_top()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (h[cx.pointwise_join(i, j)] != cy.pointwise_join(h[i], h[j])) return false;
      if (h[cx.pointwise_meet(i, j)] != cy.pointwise_meet(h[i], h[j])) return false;
    }
  for (int u = 0; u < q; ++u)
    for (int i = 0; i < n; ++i) {
      if (h[cx.tensor_scale(u, i)] != cy.tensor_scale(u, h[i])) return false;
      if (h[cx.hom_scale(u, i)] != cy.hom_scale(u, h[i])) return false;
    }
  return true;
}

std::vector<int> contravariant_action(const VFun& f, const DualObject& cx, const DualObject& cy) {
  std::vector<int> out(cx.size());
  for (int i = 0; i < cx.size(); ++i) {
    std::vector<int> t(f.dom.m);
    for (int y = 0; y < f.dom.m; ++y) t[y] = cx.member(i)[f.map[y]];
    int j = cy.index_of(t);
    if (j < 0) fail(ErrorKind::BadDocument, "precomposition left the dual carrier");
    out[i] = j;
  }
  return out;
}

std::vector<std::vector<int>> finlat_morphisms(const DualObject& cx, const DualObject& cy,
                                               const Budget& budget) {
  const VCat& X = cx.source();
  if (!cx.finlat_closed() || !cy.finlat_closed())
    fail(ErrorKind::BadDocument, "dual object not finlat-closed");
  if (!verify_decomposition(cx))
    fail(ErrorKind::BadDocument, "representable decomposition failed; dual object is inconsistent");
  // A finsup morphism CX -> CY is determined by its values on the
  // representables a(-,x); enumerate those, rebuild, filter.
  require_budget(budget, checked_pow(cy.size(), X.m), "finlat_morphisms");
  std::vector<int> sigma(X.m);
  for (int x = 0; x < X.m; ++x) {
    sigma[x] = cx.index_of(representable_in_cx(X, x));
    if (sigma[x] < 0) fail(ErrorKind::BadDocument, "representable missing from the dual carrier");
  }
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  std::vector<int> g(X.m, 0);
  do {
    // h(psi) = V_x psi(x) (x) g_x computed in CY.
    std::vector<int> h(cx.size());
    for (int i = 0; i < cx.size(); ++i) {
      int acc = cy.const_bot();
      for (int x = 0; x < X.m; ++x) acc = cy.pointwise_join(acc, cy.tensor_scale(cx.member(i)[x], g[x]));
      h[i] = acc;
    }
    if (seen.insert(h).second && is_finlat_hemimorphism(cx, cy, h)) out.push_back(h);
  } while (next_map(g, cy.size()));
  std::sort(out.begin(), out.end());
  return out;
}

FullFaithfulnessReport verify_full_faithfulness(const VCat& X, const VCat& Y, const Budget& budget) {
  FullFaithfulnessReport r;
  DualObject cx = DualObject::build(X, budget);
  DualObject cy = DualObject::build(Y, budget);
  auto homs = enumerate_vfunctors(Y, X, budget);
  r.hom_count = homs.size();
  std::set<std::vector<int>> actions;
  for (const auto& f : homs) {
    auto act = contravariant_action(f, cx, cy);
    if (!actions.insert(act).second) r.faithful = false;
  }
  auto lats = finlat_morphisms(cx, cy, budget);
  r.finlat_count = lats.size();
  for (const auto& h : lats)
    if (!actions.count(h)) {
      r.full = false;
      r.witness.push_back(h);
    }
  if (actions.size() != lats.size()) r.full = false;
  return r;
}

FnSet closed_subcategory(const VCat& X, const FnSet& seed) {
  const auto& q = *X.q;
  if (!q.is_lukasiewicz_chain())
    fail(ErrorKind::NotLukasiewicz, "closed subcategories require a Lukasiewicz chain");
  std::set<std::vector<int>> R(seed.begin(), seed.end());
  R.insert(std::vector<int>(X.m, q.bot()));
  R.insert(std::vector<int>(X.m, q.top()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> fresh;
    for (const auto& f : R) {
      for (int u = 0; u < q.size(); ++u) {
        std::vector<int> t(X.m), h(X.m);
        for (int x = 0; x < X.m; ++x) {
          t[x] = q.tensor(u, f[x]);
          h[x] = q.hom(u, f[x]);
        }
        if (!R.count(t)) fresh.push_back(std::move(t));
        if (!R.count(h)) fresh.push_back(std::move(h));
      }
      for (const auto& g : R) {
        std::vector<int> j(X.m), m(X.m);
        for (int x = 0; x < X.m; ++x) {
          j[x] = q.join(f[x], g[x]);
          m[x] = q.meet(f[x], g[x]);
        }
        if (!R.count(j)) fresh.push_back(std::move(j));
        if (!R.count(m)) fresh.push_back(std::move(m));
      }
    }
    for (auto& f : fresh)
      if (R.insert(std::move(f)).second) grew = true;
  }
  return FnSet(R.begin(), R.end());
}

VCat induced_structure(const VCat& X, const FnSet& R) {
  const auto& q = *X.q;
  if (!q.is_lukasiewicz_chain())
    fail(ErrorKind::NotLukasiewicz, "induced structures require a Lukasiewicz chain");
  VCat A = VCat::raw(X.q, X.m, std::vector<int>(static_cast<std::size_t>(X.m) * X.m));
  A.labels = X.labels;
  for (int y = 0; y < X.m; ++y)
    for (int x = 0; x < X.m; ++x) {
      int acc = q.top();
      for (const auto& phi : R)
        if (phi[y] == q.top()) acc = q.meet(acc, phi[x]);
      A.at(y, x) = acc;
    }
  return A;
}

std::vector<int> mu_from_R(const VCat& X, const FnSet& R, const std::vector<int>& alpha) {
  const auto& q = *X.q;
  std::vector<int> mu(X.m, q.top());
  for (const auto& phi : R) {
    bool above = true;
    for (int x = 0; x < X.m && above; ++x)
      if (!q.leq(alpha[x], phi[x])) above = false;
    if (above)
      for (int x = 0; x < X.m; ++x) mu[x] = q.meet(mu[x], phi[x]);
  }
  return mu;
}

MuReport mu_formula_check(const VCat& X, bool exhaustive_closed, const Budget& budget) {
  const auto& q = *X.q;
  if (!q.is_lukasiewicz_chain())
    fail(ErrorKind::NotLukasiewicz, "mu_formula_check requires a Lukasiewicz chain");
  MuReport rep;
  auto vx = enumerate_vfunctors(X, v_as_vcat(X.q), budget);
  FnSet functors;
  for (auto& f : vx) functors.push_back(f.map);
  std::sort(functors.begin(), functors.end());

  // The full functor set is closed and induces a back.
  VCat ind = induced_structure(X, functors);
  if (!(ind == X)) rep.induced_reproduces_structure = false;

  // mu(chi_A)(x) = V_{y in A} a(y,x), and the lemma's two-sided equality.
  for (std::uint32_t mask = 0; mask < (1u << X.m); ++mask) {
    std::vector<int> chi(X.m, q.bot());
    std::vector<int> A;
    for (int x = 0; x < X.m; ++x)
      if (mask & (1u << x)) {
        chi[x] = q.top();
        A.push_back(x);
      }
    auto mu = mu_from_R(X, functors, chi);
    auto dl = delta_map(X, A);
    if (mu != dl) rep.mu_char_formula = false;
    for (int x = 0; x < X.m; ++x) {
      int lhs = q.top();
      for (const auto& phi : functors) {
        bool one_on_A = true;
        for (int y : A)
          if (phi[y] != q.top()) one_on_A = false;
        if (one_on_A) lhs = q.meet(lhs, phi[x]);
      }
      int rhs = q.bot();
      for (int y : A) rhs = q.join(rhs, ind.at(y, x));
      if (lhs != rhs) rep.lemma_two_sided = false;
    }
  }

  // Girard density: every functor equals the meet of the bot-complements of
  // the CX members above it.
  DualObject cx = DualObject::build(X, budget);
  for (const auto& phi : functors) {
    std::vector<int> acc(X.m, q.top());
    for (int i = 0; i < cx.size(); ++i) {
      std::vector<int> comp(X.m);
      bool above = true;
      for (int x = 0; x < X.m; ++x) {
        comp[x] = q.hom(cx.member(i)[x], q.bot());
        if (!q.leq(phi[x], comp[x])) above = false;
      }
      if (above)
        for (int x = 0; x < X.m; ++x) acc[x] = q.meet(acc[x], comp[x]);
    }
    if (acc != phi) rep.girard_density = false;
  }

  if (exhaustive_closed) {
    const std::uint64_t space = checked_pow(q.size(), X.m);
    require_budget(budget, space, "mu_formula_check seed enumeration");
    // All maps X -> V.
    FnSet all;
    std::vector<int> f(X.m, 0);
    do {
      all.push_back(f);
    } while (next_map(f, q.size()));
    require_budget(budget, checked_pow(2, all.size()), "mu_formula_check closed enumeration");
    std::set<FnSet> closed;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      FnSet seed;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask & (1u << i)) seed.push_back(all[i]);
      closed.insert(closed_subcategory(X, seed));
    }
    std::map<std::vector<int>, FnSet> by_structure;
    for (const auto& R : closed) {
      auto key = induced_structure(X, R).a;
      auto [it, fresh] = by_structure.emplace(key, R);
      if (!fresh && !(it->second == R)) rep.closed_sets_determined = false;
    }
  }
  return rep;
}

}  // namespace qdw

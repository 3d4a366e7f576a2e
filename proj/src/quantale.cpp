#include "qdw/quantale.hpp"

#include <algorithm>
#include <numeric>

namespace qdw {

namespace {

std::string default_label(int i) { return std::to_string(i); }

// Labels 0, 1/m, ..., 1 for an m+1 level chain.
std::string chain_label(int i, int m) {
  if (i == 0) return "0";
  if (i == m) return "1";
  return std::to_string(i) + "/" + std::to_string(m);
}

}  // namespace

std::shared_ptr<const Quantale> Quantale::build_table(std::vector<std::vector<bool>> leq,
                                                      std::vector<std::vector<int>> tensor,
                                                      int unit, std::vector<std::string> labels,
                                                      std::vector<int> dense, std::string name) {
  const int n = static_cast<int>(leq.size());
  if (n < 1) fail(ErrorKind::NotALattice, "empty carrier");
  auto q = std::shared_ptr<Quantale>(new Quantale());
  q->n_ = n;
  q->name_ = std::move(name);
  q->leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(leq[u].size()) != n) fail(ErrorKind::NotALattice, "ragged order matrix");
    for (int v = 0; v < n; ++v) q->leq_[q->idx(u, v)] = leq[u][v] ? 1 : 0;
  }
  q->tensor_.assign(static_cast<std::size_t>(n) * n, 0);
  if (static_cast<int>(tensor.size()) != n) fail(ErrorKind::TensorNotMonoid, "ragged tensor table");
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(tensor[u].size()) != n) fail(ErrorKind::TensorNotMonoid, "ragged tensor table");
    for (int v = 0; v < n; ++v) {
      int t = tensor[u][v];
      if (t < 0 || t >= n) fail(ErrorKind::TensorNotMonoid, "tensor entry out of range");
      q->tensor_[q->idx(u, v)] = t;
    }
  }
  if (unit < 0 || unit >= n) fail(ErrorKind::TensorNotMonoid, "unit out of range");
  q->unit_ = unit;
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = default_label(i);
  }
  if (static_cast<int>(labels.size()) != n) fail(ErrorKind::NotALattice, "label count mismatch");
  q->labels_ = std::move(labels);
  if (dense.empty()) {
    dense.resize(n);
    std::iota(dense.begin(), dense.end(), 0);
  }
  for (int d : dense)
    if (d < 0 || d >= n) fail(ErrorKind::NotALattice, "dense element out of range");
  std::sort(dense.begin(), dense.end());
  dense.erase(std::unique(dense.begin(), dense.end()), dense.end());
  q->dense_ = std::move(dense);
  q->derive_and_check();
  return q;
}

void Quantale::derive_and_check() {
  const int n = n_;
  // Partial order.
  for (int u = 0; u < n; ++u)
    if (!leq(u, u)) fail(ErrorKind::NotALattice, "order not reflexive at " + label(u), {u});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq(u, v) && leq(v, u))
        fail(ErrorKind::NotALattice, "order not antisymmetric at (" + label(u) + "," + label(v) + ")",
             {u, v});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (leq(u, v) && leq(v, w) && !leq(u, w))
          fail(ErrorKind::NotALattice, "order not transitive through " + label(v), {u, v, w});

  // Binary joins and meets must exist (finite lattice; n>=1 then gives top/bottom).
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int lub = -1, glb = -1;
      for (int w = 0; w < n; ++w) {
        if (leq(u, w) && leq(v, w)) {
          bool least = true;
          for (int z = 0; z < n; ++z)
            if (leq(u, z) && leq(v, z) && !leq(w, z)) least = false;
          if (least) lub = w;
        }
        if (leq(w, u) && leq(w, v)) {
          bool greatest = true;
          for (int z = 0; z < n; ++z)
            if (leq(z, u) && leq(z, v) && !leq(z, w)) greatest = false;
          if (greatest) glb = w;
        }
      }
      if (lub < 0)
        fail(ErrorKind::NotALattice, "no join for (" + label(u) + "," + label(v) + ")", {u, v});
      if (glb < 0)
        fail(ErrorKind::NotALattice, "no meet for (" + label(u) + "," + label(v) + ")", {u, v});
      join_[idx(u, v)] = lub;
      meet_[idx(u, v)] = glb;
    }
  bot_ = 0;
  top_ = 0;
  for (int u = 0; u < n; ++u) {
    bot_ = meet(bot_, u);
    top_ = join(top_, u);
  }

  // Commutative monoid with identity unit_.
  for (int u = 0; u < n; ++u)
    if (tensor(unit_, u) != u)
      fail(ErrorKind::TensorNotMonoid, "unit law fails at " + label(u), {u});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (tensor(u, v) != tensor(v, u))
        fail(ErrorKind::TensorNotMonoid, "tensor not commutative at (" + label(u) + "," + label(v) + ")",
             {u, v});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (tensor(tensor(u, v), w) != tensor(u, tensor(v, w)))
          fail(ErrorKind::TensorNotMonoid,
               "tensor not associative at (" + label(u) + "," + label(v) + "," + label(w) + ")",
               {u, v, w});

  // u (x) - must preserve joins (equivalently: have a right adjoint).
  for (int u = 0; u < n; ++u) {
    if (tensor(u, bot_) != bot_)
      fail(ErrorKind::AdjunctionFails, "tensor(" + label(u) + ", bottom) != bottom", {u, bot_, bot_});
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (tensor(u, join(v, w)) != join(tensor(u, v), tensor(u, w)))
          fail(ErrorKind::AdjunctionFails,
               "tensor by " + label(u) + " does not preserve join(" + label(v) + "," + label(w) + ")",
               {u, v, w});
  }

  // hom(u,v) = V{w : u (x) w <= v}; then verify the adjunction equivalence.
  hom_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int h = bot_;
      for (int w = 0; w < n; ++w)
        if (leq(tensor(u, w), v)) h = join(h, w);
      hom_[idx(u, v)] = h;
    }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (leq(tensor(u, w), v) != leq(w, hom(u, v)))
          fail(ErrorKind::AdjunctionFails,
               "adjunction fails at (" + label(u) + "," + label(v) + "," + label(w) + ")", {u, v, w});

  compute_totally_below();
}

void Quantale::compute_totally_below() {
  const int n = n_;
  // Join-irreducible shortcut: quantify over subsets of the irreducibles
  // only (every subset join equals a join of irreducibles below it). The
  // 2^n definitional oracle is the contract and lives in the tests.
  std::vector<int> irr;
  for (int j = 0; j < n; ++j) {
    int acc = bot_;
    for (int x = 0; x < n; ++x)
      if (leq(x, j) && x != j) acc = join(acc, x);
    if (acc != j) irr.push_back(j);  // j is not the join of elements strictly below
  }
  if (irr.size() > 30)
    fail(ErrorKind::CarrierTooLarge, "too many join-irreducibles for the totally-below computation");
  below_.assign(static_cast<std::size_t>(n) * n, 1);
  const std::uint32_t subsets = 1u << irr.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    int j = bot_;
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (mask & (1u << i)) j = join(j, irr[i]);
    for (int u = 0; u < n; ++u) {
      if (!leq(u, j)) continue;  // subset does not cover u
      for (int v = 0; v < n; ++v) {
        if (!below_[idx(v, u)]) continue;
        bool dominated = false;
        for (std::size_t i = 0; i < irr.size() && !dominated; ++i)
          if ((mask & (1u << i)) && leq(v, irr[i])) dominated = true;
        if (!dominated) below_[idx(v, u)] = 0;
      }
    }
  }
}

bool Quantale::is_chain() const {
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (!leq(u, v) && !leq(v, u)) return false;
  return true;
}

bool Quantale::is_completely_distributive() const {
  for (int v = 0; v < n_; ++v) {
    int acc = bot_;
    for (int u = 0; u < n_; ++u)
      if (below(u, v)) acc = join(acc, u);
    if (acc != v) return false;
  }
  return true;
}

bool Quantale::is_girard() const {
  for (int u = 0; u < n_; ++u)
    if (hom(hom(u, bot_), bot_) != u) return false;
  return true;
}

bool Quantale::assumption3_holds() const {
  for (int v = 0; v < n_; ++v) {
    std::vector<int> set;
    for (int u = 0; u < n_; ++u)
      if (below(u, v)) set.push_back(u);
    for (int a : set)
      for (int b : set) {
        bool bounded = false;
        for (int c : set)
          if (leq(a, c) && leq(b, c)) bounded = true;
        if (!bounded) return false;
      }
  }
  return true;
}

bool Quantale::assumption2_holds() const {
  for (int v = 0; v < n_; ++v) {
    int acc = bot_;
    for (int u : dense_)
      if (below(u, v)) acc = join(acc, u);
    if (acc != v) return false;
  }
  return true;
}

bool Quantale::is_lukasiewicz_chain() const {
  return is_chain() && is_girard() && unit_ == top_;
}

int Quantale::join_all(const std::vector<int>& xs) const {
  int acc = bot_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int Quantale::meet_all(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

void Quantale::require_cd(const char* what) const {
  if (!is_completely_distributive())
    fail(ErrorKind::NotCompletelyDistributive, std::string(what) + ": quantale is not completely distributive");
}

std::vector<std::vector<int>> Quantale::scott_subbase() const {
  require_cd("scott_subbase");
  std::vector<std::vector<int>> out;
  for (int v : dense_) {
    std::vector<int> s;
    for (int u = 0; u < n_; ++u)
      if (below(v, u)) s.push_back(u);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> Quantale::dual_scott_subbase() const {
  require_cd("dual_scott_subbase");
  std::vector<std::vector<int>> out;
  for (int v : dense_) {
    std::vector<int> s;
    for (int u = 0; u < n_; ++u)
      if (leq(v, u)) s.push_back(u);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> Quantale::lawson_subbase() const {
  require_cd("lawson_subbase");
  auto out = scott_subbase();
  for (int v : dense_) {
    std::vector<int> s;
    for (int u = 0; u < n_; ++u)
      if (!leq(v, u)) s.push_back(u);
    out.push_back(std::move(s));
  }
  return out;
}

std::shared_ptr<const Quantale> Quantale::build_two() {
  return build_chain(2, TensorKind::Minimum);
}

std::shared_ptr<const Quantale> Quantale::build_chain(int n_levels, TensorKind kind) {
  if (n_levels < 2) fail(ErrorKind::NotALattice, "build_chain needs at least 2 levels");
  const int n = n_levels, m = n_levels - 1;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<int>> tensor(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = chain_label(i, m);
    for (int j = 0; j < n; ++j) {
      leq[i][j] = i <= j;
      tensor[i][j] = kind == TensorKind::Lukasiewicz ? std::max(0, i + j - m) : std::min(i, j);
    }
  }
  std::string name = (kind == TensorKind::Lukasiewicz ? "lukasiewicz" : "godel") + std::string("-") +
                     std::to_string(n);
  return build_table(std::move(leq), std::move(tensor), m, std::move(labels), {}, std::move(name));
}

std::shared_ptr<const Quantale> Quantale::build_df_quantale(int time_points, int value_levels,
                                                            TensorKind base_tensor, int carrier_bound) {
  if (time_points < 2 || value_levels < 2)
    fail(ErrorKind::NotALattice, "build_df_quantale needs both counts >= 2");
  const int grid = time_points + 1;  // t0..t_{m}, inf
  const int vmax = value_levels - 1;
  // Monotone tuples with f(t0) = 0.
  std::vector<std::vector<int>> carrier;
  std::vector<int> f(grid, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i + 1 < grid && mono; ++i)
      if (f[i] > f[i + 1]) mono = false;
    if (mono && f[0] == 0) carrier.push_back(f);
    if (static_cast<int>(carrier.size()) > carrier_bound)
      fail(ErrorKind::CarrierTooLarge, "df-quantale carrier exceeds bound " + std::to_string(carrier_bound));
    if (!next_map(f, value_levels)) break;
  }
  std::sort(carrier.begin(), carrier.end());
  const int n = static_cast<int>(carrier.size());

  auto base = [&](int a, int b) {
    return base_tensor == TensorKind::Lukasiewicz ? std::max(0, a + b - vmax) : std::min(a, b);
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<int>> tensor(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  auto find = [&](const std::vector<int>& g) {
    return static_cast<int>(std::lower_bound(carrier.begin(), carrier.end(), g) - carrier.begin());
  };
  for (int a = 0; a < n; ++a) {
    std::string lab = "(";
    for (int i = 0; i < grid; ++i) lab += chain_label(carrier[a][i], vmax) + (i + 1 < grid ? "," : ")");
    labels[a] = lab;
    for (int b = 0; b < n; ++b) {
      bool le = true;
      std::vector<int> prod(grid);
      for (int i = 0; i < grid; ++i) {
        if (carrier[a][i] > carrier[b][i]) le = false;
        // max-addition grid: V_{max(r,s)<=t} f(r)g(s) = f(t)g(t) by monotonicity
        prod[i] = base(carrier[a][i], carrier[b][i]);
      }
      leq[a][b] = le;
      tensor[a][b] = find(prod);
    }
  }
  std::vector<int> kappa(grid, vmax);
  kappa[0] = 0;
  return build_table(std::move(leq), std::move(tensor), find(kappa), std::move(labels), {},
                     "df-" + std::to_string(time_points) + "x" + std::to_string(value_levels));
}

std::vector<std::vector<bool>> totally_below_bruteforce(const Quantale& q) {
  const int n = q.size();
  if (n > 20) fail(ErrorKind::CarrierTooLarge, "brute-force totally-below limited to n <= 20");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int j = q.bot();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) j = q.join(j, i);
    for (int u = 0; u < n; ++u) {
      if (!q.leq(u, j)) continue;
      for (int v = 0; v < n; ++v) {
        if (!rel[v][u]) continue;
        bool dominated = false;
        for (int i = 0; i < n && !dominated; ++i)
          if ((mask & (1u << i)) && q.leq(v, i)) dominated = true;
        if (!dominated) rel[v][u] = false;
      }
    }
  }
  return rel;
}

std::vector<std::vector<bool>> totally_below(const Quantale& q) {
  const int n = q.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) rel[v][u] = q.below(v, u);
  return rel;
}

std::vector<std::uint32_t> topology_from_subbase(int n, const std::vector<std::vector<int>>& subbase) {
  if (n > 20) fail(ErrorKind::CarrierTooLarge, "topology closure limited to n <= 20");
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> sets = {0u, full};
  for (const auto& s : subbase) {
    std::uint32_t m = 0;
    for (int x : s) m |= 1u << x;
    sets.push_back(m);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> fresh;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        for (std::uint32_t c : {sets[i] & sets[j], sets[i] | sets[j]})
          if (!std::binary_search(sets.begin(), sets.end(), c)) fresh.push_back(c);
      }
    if (!fresh.empty()) {
      grew = true;
      sets.insert(sets.end(), fresh.begin(), fresh.end());
      std::sort(sets.begin(), sets.end());
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    }
  }
  return sets;
}

}  // namespace qdw

#include "qdw/ordered.hpp"

#include <algorithm>

namespace qdw {

FinPoset FinPoset::make(std::vector<std::vector<bool>> leq, std::vector<std::string> labels,
                        std::string name) {
  FinPoset P;
  P.n = static_cast<int>(leq.size());
  P.name = std::move(name);
  P.leq_.assign(static_cast<std::size_t>(P.n) * P.n, 0);
  for (int x = 0; x < P.n; ++x) {
    if (static_cast<int>(leq[x].size()) != P.n) fail(ErrorKind::BadDocument, "ragged order matrix");
    for (int y = 0; y < P.n; ++y) P.leq_[static_cast<std::size_t>(x) * P.n + y] = leq[x][y] ? 1 : 0;
  }
  for (int x = 0; x < P.n; ++x)
    if (!P.leq(x, x)) fail(ErrorKind::NotALattice, "poset order not reflexive", {x});
  for (int x = 0; x < P.n; ++x)
    for (int y = 0; y < P.n; ++y) {
      if (x != y && P.leq(x, y) && P.leq(y, x))
        fail(ErrorKind::NotALattice, "poset order not antisymmetric", {x, y});
      for (int z = 0; z < P.n; ++z)
        if (P.leq(x, y) && P.leq(y, z) && !P.leq(x, z))
          fail(ErrorKind::NotALattice, "poset order not transitive", {x, y, z});
    }
  if (labels.empty()) {
    labels.resize(P.n);
    for (int i = 0; i < P.n; ++i) labels[i] = "p" + std::to_string(i);
  }
  P.labels = std::move(labels);
  return P;
}

bool FinPoset::is_upper_set(const std::vector<int>& A) const {
  for (int x : A)
    for (int y = 0; y < n; ++y)
      if (leq(x, y) && std::find(A.begin(), A.end(), y) == A.end()) return false;
  return true;
}

std::vector<std::vector<int>> FinPoset::upper_sets() const {
  if (n > 20) fail(ErrorKind::CarrierTooLarge, "upper set enumeration limited to 20 points");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> A;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) A.push_back(x);
    if (is_upper_set(A)) out.push_back(std::move(A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinPoset vietoris_H(const FinPoset& P) {
  auto ups = P.upper_sets();
  const int n = static_cast<int>(ups.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string lab = "{";
    for (std::size_t k = 0; k < ups[i].size(); ++k)
      lab += P.labels[ups[i][k]] + (k + 1 < ups[i].size() ? "," : "");
    labels[i] = lab + "}";
    for (int j = 0; j < n; ++j)
      leq[i][j] = std::includes(ups[i].begin(), ups[i].end(), ups[j].begin(), ups[j].end());
  }
  return FinPoset::make(std::move(leq), std::move(labels), "H(" + P.name + ")");
}

std::vector<int> vietoris_H_map(const FinPoset& P, const FinPoset& Q, const std::vector<int>& f) {
  auto upsP = P.upper_sets();
  auto upsQ = Q.upper_sets();
  std::vector<int> out(upsP.size());
  for (std::size_t i = 0; i < upsP.size(); ++i) {
    std::vector<int> img;
    for (int x : upsP[i])
      for (int y = 0; y < Q.n; ++y)
        if (Q.leq(f[x], y)) img.push_back(y);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto it = std::lower_bound(upsQ.begin(), upsQ.end(), img);
    out[i] = static_cast<int>(it - upsQ.begin());
  }
  return out;
}

std::vector<std::vector<int>> antitone_maps(const FinPoset& P, const Quantale& chain) {
  std::vector<std::vector<int>> out;
  if (P.n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> psi(P.n, 0);
  do {
    bool anti = true;
    for (int x = 0; x < P.n && anti; ++x)
      for (int y = 0; y < P.n && anti; ++y)
        if (P.leq(x, y) && !chain.leq(psi[y], psi[x])) anti = false;
    if (anti) out.push_back(psi);
  } while (next_map(psi, chain.size()));
  return out;
}

int phi_A(const FinPoset& P, const Quantale& chain, const std::vector<int>& A,
          const std::vector<int>& psi) {
  if (!P.is_upper_set(A)) fail(ErrorKind::NotUpperSet, "phi_A needs an upper set");
  for (int x = 0; x < P.n; ++x)
    for (int y = 0; y < P.n; ++y)
      if (P.leq(x, y) && !chain.leq(psi[y], psi[x]))
        fail(ErrorKind::NotAntitone, "phi_A needs an antitone map", {x, y});
  int acc = chain.bot();
  for (int x : A) acc = chain.join(acc, psi[x]);
  return acc;
}

bool is_irreducible(const FinPoset& P, const std::vector<int>& A) {
  if (A.empty()) return false;
  auto ups = P.upper_sets();
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (const auto& B : ups)
    for (const auto& C : ups) {
      std::vector<int> uni;
      std::set_union(B.begin(), B.end(), C.begin(), C.end(), std::back_inserter(uni));
      if (contains(uni, A) && !contains(B, A) && !contains(C, A)) return false;
    }
  return true;
}

IrreducibilityReport irreducibility_equivalence(const FinPoset& P, const QuantalePtr& chain) {
  IrreducibilityReport rep;
  auto psis = antitone_maps(P, *chain);  // lexicographically sorted by construction
  auto ups = P.upper_sets();
  rep.upper_sets_checked = ups.size();
  const std::size_t N = psis.size();
  // Index of the pointwise tensor of each pair (antitone maps are closed
  // under the pointwise tensor of a chain quantale).
  std::vector<int> prod_index(N * N);
  std::vector<int> prod(P.n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      for (int x = 0; x < P.n; ++x) prod[x] = chain->tensor(psis[i][x], psis[j][x]);
      auto it = std::lower_bound(psis.begin(), psis.end(), prod);
      prod_index[i * N + j] = static_cast<int>(it - psis.begin());
    }
  std::vector<int> one(P.n, chain->top());
  const std::size_t one_idx =
      std::lower_bound(psis.begin(), psis.end(), one) - psis.begin();
  std::vector<int> phival(N);
  for (const auto& A : ups) {
    for (std::size_t i = 0; i < N; ++i) {
      int acc = chain->bot();
      for (int x : A) acc = chain->join(acc, psis[i][x]);
      phival[i] = acc;
    }
    bool monoid = phival[one_idx] == chain->top();
    for (std::size_t i = 0; i < N && monoid; ++i)
      for (std::size_t j = 0; j < N && monoid; ++j)
        if (phival[prod_index[i * N + j]] != chain->tensor(phival[i], phival[j])) monoid = false;
    if (monoid != is_irreducible(P, A)) {
      rep.equivalence_holds = false;
      rep.witness_A = A;
      return rep;
    }
  }
  return rep;
}

bool MonotoneRelation::is_monotone() const {
  for (int x = 0; x < dom->n; ++x) {
    for (int y = 0; y < cod->n; ++y)
      if (at(x, y))
        for (int y2 = 0; y2 < cod->n; ++y2)
          if (cod->leq(y, y2) && !at(x, y2)) return false;
    for (int x2 = 0; x2 < dom->n; ++x2)
      if (dom->leq(x, x2))
        for (int y = 0; y < cod->n; ++y)
          if (at(x2, y) && !at(x, y)) return false;
  }
  return true;
}

std::vector<int> hemimorphism_from_relation(const MonotoneRelation& R, const QuantalePtr& chain,
                                            const std::vector<int>& psi) {
  if (!R.is_monotone()) fail(ErrorKind::NotMonotoneRelation, "relation is not continuous monotone");
  std::vector<int> out(R.dom->n, chain->bot());
  for (int x = 0; x < R.dom->n; ++x)
    for (int y = 0; y < R.cod->n; ++y)
      if (R.at(x, y)) out[x] = chain->join(out[x], psi[y]);
  return out;
}

bool function_detection(const MonotoneRelation& R, const QuantalePtr& chain) {
  if (!R.is_monotone()) fail(ErrorKind::NotMonotoneRelation, "relation is not continuous monotone");
  auto psis = antitone_maps(*R.cod, *chain);
  const std::size_t N = psis.size();
  // CR tabulated once per test map; strict monoid morphism means CR(1) = 1
  // and CR(psi (x) psi') = CR psi (x) CR psi', pointwise over the domain.
  std::vector<std::vector<int>> cr(N);
  for (std::size_t i = 0; i < N; ++i) {
    cr[i].assign(R.dom->n, chain->bot());
    for (int x = 0; x < R.dom->n; ++x)
      for (int y = 0; y < R.cod->n; ++y)
        if (R.at(x, y)) cr[i][x] = chain->join(cr[i][x], psis[i][y]);
  }
  std::vector<int> one(R.cod->n, chain->top());
  const std::size_t one_idx = std::lower_bound(psis.begin(), psis.end(), one) - psis.begin();
  for (int x = 0; x < R.dom->n; ++x)
    if (cr[one_idx][x] != chain->top()) return false;
  std::vector<int> prod(R.cod->n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      for (int y = 0; y < R.cod->n; ++y) prod[y] = chain->tensor(psis[i][y], psis[j][y]);
      auto it = std::lower_bound(psis.begin(), psis.end(), prod);
      const auto& lhs = cr[it - psis.begin()];
      for (int x = 0; x < R.dom->n; ++x)
        if (lhs[x] != chain->tensor(cr[i][x], cr[j][x])) return false;
    }
  return true;
}

bool is_graph_of_monotone_map(const MonotoneRelation& R) {
  if (!R.is_monotone()) return false;
  std::vector<int> f(R.dom->n, -1);
  for (int x = 0; x < R.dom->n; ++x) {
    // R(x) must be a principal upper set: a unique minimum.
    int least = -1;
    for (int y = 0; y < R.cod->n; ++y) {
      if (!R.at(x, y)) continue;
      bool minimum = true;
      for (int y2 = 0; y2 < R.cod->n; ++y2)
        if (R.at(x, y2) && !R.cod->leq(y, y2)) minimum = false;
      if (minimum) least = y;
    }
    if (least < 0) return false;
    f[x] = least;
  }
  for (int x = 0; x < R.dom->n; ++x)
    for (int x2 = 0; x2 < R.dom->n; ++x2)
      if (R.dom->leq(x, x2) && !R.cod->leq(f[x], f[x2])) return false;
  return true;
}

}  // namespace qdw

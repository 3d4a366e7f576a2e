#include "qdw/encoding.hpp"

namespace qdw {

namespace {

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1; }

// Level at an arbitrary element w: the family entry when w is dense,
// otherwise the intersection over {v in D : v totally below w} (the
// up-set of w is that intersection of dense up-sets under Assumption 2).
BitRel level_at(const LevelFamily& fam, int w) {
  const auto& D = fam.q->dense();
  for (std::size_t i = 0; i < D.size(); ++i)
    if (D[i] == w) return fam.family[i];
  const int nrows = fam.family.empty() ? 0 : fam.family[0].n;
  BitRel acc(nrows);
  const std::uint64_t full = full_mask(fam.base_size);
  for (auto& row : acc.rows) row = full;
  for (std::size_t i = 0; i < D.size(); ++i)
    if (fam.q->below(D[i], w))
      for (int r = 0; r < nrows; ++r) acc.rows[r] &= fam.family[i].rows[r];
  return acc;
}

}  // namespace

int LevelFamily::first_incompatible() const {
  const auto& D = q->dense();
  const std::uint64_t full = full_mask(base_size);
  for (std::size_t i = 0; i < D.size(); ++i) {
    const int nrows = family[i].n;
    std::vector<std::uint64_t> expect(nrows, full);
    for (std::size_t j = 0; j < D.size(); ++j)
      if (q->below(D[j], D[i]))
        for (int r = 0; r < nrows; ++r) expect[r] &= family[j].rows[r];
    for (int r = 0; r < nrows; ++r)
      if (family[i].rows[r] != expect[r]) return static_cast<int>(i);
  }
  return -1;
}

LevelFamily encode(const std::vector<int>& phi, const QuantalePtr& q) {
  if (phi.size() > 64) fail(ErrorKind::CarrierTooLarge, "encode limited to 64 points");
  LevelFamily fam;
  fam.q = q;
  fam.base_size = static_cast<int>(phi.size());
  for (int u : q->dense()) {
    BitRel b(1);
    for (std::size_t x = 0; x < phi.size(); ++x)
      if (q->leq(u, phi[x])) b.rows[0] |= std::uint64_t(1) << x;
    fam.family.push_back(std::move(b));
  }
  return fam;
}

std::vector<int> decode(const LevelFamily& fam) {
  int bad = fam.first_incompatible();
  if (bad >= 0) {
    int u = fam.q->dense()[bad];
    fail(ErrorKind::IncompatibleFamily,
         "level family incompatible at dense element " + fam.q->label(u), {u});
  }
  const auto& D = fam.q->dense();
  std::vector<int> phi(fam.base_size, fam.q->bot());
  for (int x = 0; x < fam.base_size; ++x)
    for (std::size_t i = 0; i < D.size(); ++i)
      if ((fam.family[i].rows[0] >> x) & 1) phi[x] = fam.q->join(phi[x], D[i]);
  return phi;
}

LevelFamily structure_to_relations(const VCat& X) {
  if (X.m > 64) fail(ErrorKind::CarrierTooLarge, "relation encoding limited to 64 points");
  LevelFamily fam;
  fam.q = X.q;
  fam.base_size = X.m;
  for (int u : X.q->dense()) {
    BitRel r(X.m);
    for (int x = 0; x < X.m; ++x)
      for (int y = 0; y < X.m; ++y)
        if (X.q->leq(u, X.at(x, y))) r.set(x, y);
    fam.family.push_back(std::move(r));
  }
  return fam;
}

bool relations_reflexive(const LevelFamily& fam) {
  BitRel rk = level_at(fam, fam.q->unit());
  for (int x = 0; x < fam.base_size; ++x)
    if (!rk.get(x, x)) return false;
  return true;
}

bool relations_transitive(const LevelFamily& fam) {
  const auto& D = fam.q->dense();
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = 0; j < D.size(); ++j) {
      BitRel target = level_at(fam, fam.q->tensor(D[i], D[j]));
      if (!fam.family[i].compose(fam.family[j]).subset_of(target)) return false;
    }
  return true;
}

bool r_k_antisymmetric(const LevelFamily& fam) {
  BitRel rk = level_at(fam, fam.q->unit());
  for (int x = 0; x < fam.base_size; ++x)
    for (int y = 0; y < fam.base_size; ++y)
      if (x != y && rk.get(x, y) && rk.get(y, x)) return false;
  return true;
}

std::vector<RelationViolation> relation_violations(const LevelFamily& fam) {
  std::vector<RelationViolation> out;
  const auto& D = fam.q->dense();
  const int k = fam.q->unit();
  BitRel rk = level_at(fam, k);
  for (int x = 0; x < fam.base_size; ++x)
    if (!rk.get(x, x)) out.push_back({0, k, k, x, x});
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = 0; j < D.size(); ++j) {
      BitRel target = level_at(fam, fam.q->tensor(D[i], D[j]));
      BitRel comp = fam.family[i].compose(fam.family[j]);
      for (int x = 0; x < fam.base_size; ++x)
        for (int y = 0; y < fam.base_size; ++y)
          if (comp.get(x, y) && !target.get(x, y)) out.push_back({1, D[i], D[j], x, y});
    }
  return out;
}

}  // namespace qdw

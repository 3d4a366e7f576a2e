#include "qdw/vcat.hpp"

#include <algorithm>
#include <map>

namespace qdw {

VCat VCat::make(QuantalePtr q, std::vector<std::vector<int>> matrix, std::vector<std::string> labels,
                std::string name) {
  VCat X;
  X.q = std::move(q);
  X.m = static_cast<int>(matrix.size());
  X.a.reserve(static_cast<std::size_t>(X.m) * X.m);
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != X.m) fail(ErrorKind::BadDocument, "ragged structure matrix");
    for (int e : row) {
      if (e < 0 || e >= X.q->size()) fail(ErrorKind::BadDocument, "structure entry out of range");
      X.a.push_back(e);
    }
  }
  if (labels.empty()) {
    labels.resize(X.m);
    for (int i = 0; i < X.m; ++i) labels[i] = "x" + std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != X.m) fail(ErrorKind::BadDocument, "label count mismatch");
  X.labels = std::move(labels);
  X.name = std::move(name);
  if (auto v = X.validate()) throw Error(v->kind, v->message, {v->witness.begin(), v->witness.end()});
  return X;
}

VCat VCat::raw(QuantalePtr q, int m, std::vector<int> flat) {
  VCat X;
  X.q = std::move(q);
  X.m = m;
  X.a = std::move(flat);
  X.labels.resize(m);
  for (int i = 0; i < m; ++i) X.labels[i] = "x" + std::to_string(i);
  return X;
}

std::optional<LawViolation> VCat::validate() const {
  for (int x = 0; x < m; ++x)
    if (!q->leq(q->unit(), at(x, x)))
      return LawViolation{ErrorKind::ReflexivityFails, {x}, "k not below a(" + label(x) + "," + label(x) + ")"};
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (!q->leq(q->tensor(at(x, y), at(y, z)), at(x, z)))
          return LawViolation{ErrorKind::TransitivityFails,
                              {x, y, z},
                              "transitivity fails through " + label(y) + " for (" + label(x) + "," +
                                  label(z) + ")"};
  return std::nullopt;
}

bool VCat::is_separated() const {
  const int k = q->unit();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && q->leq(k, at(x, y)) && q->leq(k, at(y, x))) return false;
  return true;
}

VCat VCat::dual() const {
  VCat X = *this;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < x; ++y) std::swap(X.at(x, y), X.at(y, x));
  return X;
}

bool VFun::is_valid() const {
  if (dom.q != cod.q || static_cast<int>(map.size()) != dom.m) return false;
  for (int v : map)
    if (v < 0 || v >= cod.m) return false;
  for (int x = 0; x < dom.m; ++x)
    for (int y = 0; y < dom.m; ++y)
      if (!dom.q->leq(dom.at(x, y), cod.at(map[x], map[y]))) return false;
  return true;
}

bool VFun::is_injective() const {
  std::vector<char> seen(cod.m, 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool VFun::is_surjective() const {
  std::vector<char> seen(cod.m, 0);
  for (int v : map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool VFun::is_embedding() const {
  if (!is_injective()) return false;
  for (int x = 0; x < dom.m; ++x)
    for (int y = 0; y < dom.m; ++y)
      if (dom.at(x, y) != cod.at(map[x], map[y])) return false;
  return true;
}

std::vector<VFun> enumerate_vfunctors(const VCat& X, const VCat& Y, const Budget& budget) {
  if (X.q != Y.q) fail(ErrorKind::BadDocument, "functor enumeration across different quantales");
  std::vector<VFun> out;
  if (X.m == 0) {
    out.push_back(VFun{X, Y, {}});
    return out;
  }
  if (Y.m == 0) return out;
  require_budget(budget, checked_pow(Y.m, X.m), "enumerate_vfunctors");
  std::vector<int> map(X.m, 0);
  do {
    bool ok = true;
    for (int x = 0; x < X.m && ok; ++x)
      for (int y = 0; y < X.m && ok; ++y)
        if (!X.q->leq(X.at(x, y), Y.at(map[x], map[y]))) ok = false;
    if (ok) out.push_back(VFun{X, Y, map});
  } while (next_map(map, Y.m));
  return out;
}

VCat v_as_vcat(const QuantalePtr& q) {
  const int n = q->size();
  VCat X = VCat::raw(q, n, std::vector<int>(static_cast<std::size_t>(n) * n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) X.at(u, v) = q->hom(u, v);
  X.labels = q->labels();
  X.name = "V";
  return X;
}

VCat initial_structure(const QuantalePtr& q, int carrier_size,
                       const std::vector<std::pair<std::vector<int>, VCat>>& cone) {
  VCat X = VCat::raw(q, carrier_size,
                     std::vector<int>(static_cast<std::size_t>(carrier_size) * carrier_size, q->top()));
  for (const auto& [map, Y] : cone) {
    for (int x = 0; x < carrier_size; ++x)
      for (int y = 0; y < carrier_size; ++y) X.at(x, y) = q->meet(X.at(x, y), Y.at(map[x], map[y]));
  }
  return X;
}

std::pair<VFun, VFun> factorize(const VFun& f) {
  // Image points in ascending codomain order.
  std::vector<int> image;
  for (int v : f.map) image.push_back(v);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const int im = static_cast<int>(image.size());
  VCat I = VCat::raw(f.cod.q, im, std::vector<int>(static_cast<std::size_t>(im) * im));
  for (int i = 0; i < im; ++i) {
    I.labels[i] = f.cod.label(image[i]);
    for (int j = 0; j < im; ++j) I.at(i, j) = f.cod.at(image[i], image[j]);
  }
  std::vector<int> surj(f.dom.m);
  for (int x = 0; x < f.dom.m; ++x)
    surj[x] = static_cast<int>(std::lower_bound(image.begin(), image.end(), f.map[x]) - image.begin());
  return {VFun{f.dom, I, std::move(surj)}, VFun{I, f.cod, std::move(image)}};
}

VCat product_of(const VCat& X, const VCat& Y) {
  const int m = X.m * Y.m;
  VCat P = VCat::raw(X.q, m, std::vector<int>(static_cast<std::size_t>(m) * m));
  auto id = [&](int x, int y) { return x * Y.m + y; };
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < Y.m; ++y) {
      P.labels[id(x, y)] = "(" + X.label(x) + "," + Y.label(y) + ")";
      for (int x2 = 0; x2 < X.m; ++x2)
        for (int y2 = 0; y2 < Y.m; ++y2)
          P.at(id(x, y), id(x2, y2)) = X.q->meet(X.at(x, x2), Y.at(y, y2));
    }
  return P;
}

VCat coproduct_of(const VCat& X, const VCat& Y) {
  const int m = X.m + Y.m;
  VCat C = VCat::raw(X.q, m, std::vector<int>(static_cast<std::size_t>(m) * m, X.q->bot()));
  for (int x = 0; x < X.m; ++x) {
    C.labels[x] = X.label(x);
    for (int y = 0; y < X.m; ++y) C.at(x, y) = X.at(x, y);
  }
  for (int x = 0; x < Y.m; ++x) {
    C.labels[X.m + x] = Y.label(x);
    for (int y = 0; y < Y.m; ++y) C.at(X.m + x, X.m + y) = Y.at(x, y);
  }
  return C;
}

VCat discrete(const QuantalePtr& q, int points) {
  VCat X = VCat::raw(q, points, std::vector<int>(static_cast<std::size_t>(points) * points, q->bot()));
  for (int x = 0; x < points; ++x) X.at(x, x) = q->unit();
  return X;
}

VCat indiscrete(const QuantalePtr& q, int points) {
  return VCat::raw(q, points, std::vector<int>(static_cast<std::size_t>(points) * points, q->top()));
}

std::pair<VFun, VCat> separated_reflection(const VCat& X) {
  const int k = X.q->unit();
  std::vector<int> rep(X.m, -1);  // least index in each class
  for (int x = 0; x < X.m; ++x) {
    if (rep[x] >= 0) continue;
    rep[x] = x;
    for (int y = x + 1; y < X.m; ++y)
      if (rep[y] < 0 && X.q->leq(k, X.at(x, y)) && X.q->leq(k, X.at(y, x))) rep[y] = x;
  }
  std::vector<int> reps;
  for (int x = 0; x < X.m; ++x)
    if (rep[x] == x) reps.push_back(x);
  const int m = static_cast<int>(reps.size());
  VCat Q = VCat::raw(X.q, m, std::vector<int>(static_cast<std::size_t>(m) * m));
  for (int i = 0; i < m; ++i) {
    Q.labels[i] = X.label(reps[i]);
    for (int j = 0; j < m; ++j) Q.at(i, j) = X.at(reps[i], reps[j]);
  }
  std::vector<int> map(X.m);
  for (int x = 0; x < X.m; ++x)
    map[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  return {VFun{X, Q, std::move(map)}, Q};
}

std::vector<int> delta_map(const VCat& X, const std::vector<int>& A) {
  std::vector<int> d(X.m, X.q->bot());
  for (int x = 0; x < X.m; ++x)
    for (int y : A) d[x] = X.q->join(d[x], X.at(y, x));
  return d;
}

}  // namespace qdw

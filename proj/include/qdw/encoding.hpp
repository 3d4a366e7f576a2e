#ifndef QDW_ENCODING_HPP
#define QDW_ENCODING_HPP

#include <cstdint>
#include <vector>

#include "qdw/vcat.hpp"

namespace qdw {

/// Binary relation on <=64 points as bit rows.
struct BitRel {
  int n = 0;
  std::vector<std::uint64_t> rows;

  explicit BitRel(int n = 0) : n(n), rows(n, 0) {
    if (n > 64) fail(ErrorKind::CarrierTooLarge, "bit relations limited to 64 points");
  }
  bool get(int x, int y) const { return (rows[x] >> y) & 1; }
  void set(int x, int y) { rows[x] |= std::uint64_t(1) << y; }

  /// (x,z) in R;S iff exists y with (x,y) in R and (y,z) in S.
  BitRel compose(const BitRel& s) const {
    BitRel r(n);
    for (int x = 0; x < n; ++x) {
      std::uint64_t row = rows[x], acc = 0;
      while (row) {
        int y = __builtin_ctzll(row);
        row &= row - 1;
        acc |= s.rows[y];
      }
      r.rows[x] = acc;
    }
    return r;
  }
  bool subset_of(const BitRel& s) const {
    for (int x = 0; x < n; ++x)
      if (rows[x] & ~s.rows[x]) return false;
    return true;
  }
  bool operator==(const BitRel& o) const { return n == o.n && rows == o.rows; }
};

/// Level-set encoding of a V-valued map (subsets B_u) or of a structure
/// matrix (relations R_u), indexed by the dense subset D of the quantale.
///
/// Subset case: family[i] row 0 is the subset for dense element D[i].
/// Relation case: family[i] is the relation for D[i].
struct LevelFamily {
  QuantalePtr q;
  int base_size = 0;
  std::vector<BitRel> family;  // one entry per element of q->dense()

  /// B_u = intersection of the B_v with v in D totally below u; the empty
  /// index set yields the whole base. Returns the offending dense index or
  /// -1 when compatible.
  int first_incompatible() const;
  bool is_compatible() const { return first_incompatible() < 0; }
};

/// phi |-> (phi^{-1}(up u))_{u in D}.
LevelFamily encode(const std::vector<int>& phi, const QuantalePtr& q);

/// x |-> V{u in D : x in B_u}. Throws IncompatibleFamily when the family
/// fails the compatibility condition.
std::vector<int> decode(const LevelFamily& fam);

/// R_u = {(x,y) : u <= a(x,y)}.
LevelFamily structure_to_relations(const VCat& X);

bool relations_reflexive(const LevelFamily& fam);
/// R_u ; R_v subset of R_{u tensor v} for all u,v in D.
bool relations_transitive(const LevelFamily& fam);
bool r_k_antisymmetric(const LevelFamily& fam);

/// Every violated relational equation, as (kind, u, v, x, y) tuples where
/// kind 0 = reflexivity (u,v unused beyond k), 1 = transitivity.
struct RelationViolation {
  int kind;
  int u, v, x, y;
};
std::vector<RelationViolation> relation_violations(const LevelFamily& fam);

}  // namespace qdw

#endif

#ifndef QDW_QUANTALE_HPP
#define QDW_QUANTALE_HPP

#include <memory>
#include <string>
#include <vector>

#include "qdw/common.hpp"

namespace qdw {

enum class TensorKind { Lukasiewicz, Minimum };

/// Exact finite quantale. Elements are dense indices 0..n-1; labels are
/// display-only. join, meet and hom are always derived from leq and tensor
/// at construction time, and every instance has passed the full law check
/// (lattice, commutative monoid, join preservation / adjunction).
/// Immutable after construction.
class Quantale {
 public:
  /// Validates and derives. Throws NotALattice / TensorNotMonoid /
  /// AdjunctionFails with witnesses on the first broken law.
  static std::shared_ptr<const Quantale> build_table(std::vector<std::vector<bool>> leq,
                                                     std::vector<std::vector<int>> tensor,
                                                     int unit,
                                                     std::vector<std::string> labels = {},
                                                     std::vector<int> dense = {},
                                                     std::string name = {});

  /// Two element chain, tensor = meet, k = 1 = top.
  static std::shared_ptr<const Quantale> build_two();

  /// Chain 0 < 1/m < ... < 1 with m = n_levels-1 and the chosen tensor,
  /// unit = 1. Rejects n_levels < 2.
  static std::shared_ptr<const Quantale> build_chain(int n_levels, TensorKind kind);

  /// Finite model of the distance-distribution quantale: monotone maps from
  /// the time grid {t0 < ... < t_m, inf} into the value chain, anchored
  /// f(t0) = bottom, f(inf) free. Grid time addition is max, under which the
  /// convolution (f*g)(t) = V_{r+s<=t} f(r)g(s) is the pointwise base tensor
  /// and kappa (0 at t0, 1 after) is the unit.
  static std::shared_ptr<const Quantale> build_df_quantale(int time_points, int value_levels,
                                                           TensorKind base_tensor,
                                                           int carrier_bound = 4096);

  int size() const { return n_; }
  bool leq(int u, int v) const { return leq_[idx(u, v)]; }
  int join(int u, int v) const { return join_[idx(u, v)]; }
  int meet(int u, int v) const { return meet_[idx(u, v)]; }
  int tensor(int u, int v) const { return tensor_[idx(u, v)]; }
  int hom(int u, int v) const { return hom_[idx(u, v)]; }
  int unit() const { return unit_; }
  int bot() const { return bot_; }
  int top() const { return top_; }

  /// v totally below u.
  bool below(int v, int u) const { return below_[idx(v, u)]; }

  const std::vector<int>& dense() const { return dense_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int u) const { return labels_[u]; }
  const std::string& name() const { return name_; }

  bool is_trivial() const { return n_ == 1; }
  bool is_chain() const;
  bool is_completely_distributive() const;
  bool is_girard() const;
  /// {u : u totally-below v} closed under pairwise upper bounds, for every v.
  bool assumption3_holds() const;
  /// v = join{u in D : u totally-below v} for every v.
  bool assumption2_holds() const;
  /// Chain Girard quantale with k = top (the Lukasiewicz family, incl. 2).
  bool is_lukasiewicz_chain() const;

  int join_all(const std::vector<int>& xs) const;  // empty -> bottom
  int meet_all(const std::vector<int>& xs) const;  // empty -> top

  /// Subbase families as explicit subsets of the carrier (index-ascending
  /// element lists), one set per generator v in D.
  /// scott: {u : v << u}; dual_scott: up-sets (as closed sets);
  /// lawson: both scott sets and {u : v not<= u}.
  std::vector<std::vector<int>> scott_subbase() const;
  std::vector<std::vector<int>> dual_scott_subbase() const;
  std::vector<std::vector<int>> lawson_subbase() const;

 private:
  Quantale() = default;
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void derive_and_check();
  void compute_totally_below();
  void require_cd(const char* what) const;

  int n_ = 0;
  int unit_ = 0, bot_ = 0, top_ = 0;
  std::vector<char> leq_;
  std::vector<int> join_, meet_, tensor_, hom_;
  std::vector<char> below_;
  std::vector<int> dense_;
  std::vector<std::string> labels_;
  std::string name_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Definitional oracle: quantifies over all 2^n subsets. Test contract for
/// the join-irreducible shortcut used inside Quantale.
std::vector<std::vector<bool>> totally_below_bruteforce(const Quantale& q);

/// The relation as a matrix (rel[v][u] == v totally-below u).
std::vector<std::vector<bool>> totally_below(const Quantale& q);

/// Closes a subbase under finite intersections and arbitrary unions;
/// returns all open sets as sorted bitmasks (n <= 20).
std::vector<std::uint32_t> topology_from_subbase(int n, const std::vector<std::vector<int>>& subbase);

}  // namespace qdw

#endif

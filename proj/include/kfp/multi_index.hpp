#pragma once

#include <vector>
#include <cstdint>
#include <unordered_map>

namespace kfp {

/// Multi-index alpha in N^n; degree |alpha| = sum of entries.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& a) {
  int d = 0;
  for (int v : a) d += v;
  return d;
}

/// Enumeration of { alpha : |alpha| <= max_degree } in dimension n,
/// graded lexicographic: sorted by degree, lexicographic within a degree.
/// The ordering is stable across runs and is the layout of every operator
/// matrix built on the set.
class MultiIndexSet {
 public:
  MultiIndexSet(int n, int max_degree);

  int dim() const { return n_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  const MultiIndex& operator[](int i) const { return list_[i]; }

  /// Position of alpha in the enumeration, -1 if absent.
  int find(const MultiIndex& a) const;

  /// Indices of all alpha with |alpha| == l.
  std::vector<int> level(int l) const;

  /// Multiplicity m_l = #{alpha : |alpha| = l}.
  int level_count(int l) const;

  /// Index of alpha +/- e_axis, -1 if outside the set.
  int neighbor(int i, int axis, int delta) const;

 private:
  int n_;
  int max_degree_;
  std::vector<MultiIndex> list_;
  std::unordered_map<std::uint64_t, int> lookup_;
  std::uint64_t key(const MultiIndex& a) const;
};

}  // namespace kfp

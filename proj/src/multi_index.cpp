#include "kfp/multi_index.hpp"

#include <stdexcept>

namespace kfp {

namespace {
void enumerate_degree(int n, int deg, MultiIndex& cur, int pos, int left,
                      std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  // lexicographic within the degree: largest first entry first
  for (int v = left; v >= 0; --v) {
    cur[pos] = v;
    enumerate_degree(n, deg, cur, pos + 1, left - v, out);
  }
}
}  // namespace

MultiIndexSet::MultiIndexSet(int n, int max_degree)
    : n_(n), max_degree_(max_degree) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument("MultiIndexSet: bad shape");
  MultiIndex cur(n, 0);
  for (int d = 0; d <= max_degree; ++d) enumerate_degree(n, d, cur, 0, d, list_);
  lookup_.reserve(list_.size());
  for (int i = 0; i < static_cast<int>(list_.size()); ++i) lookup_[key(list_[i])] = i;
}

std::uint64_t MultiIndexSet::key(const MultiIndex& a) const {
  std::uint64_t k = 0;
  for (int v : a) k = k * 4096u + static_cast<std::uint64_t>(v + 1);
  return k;
}

int MultiIndexSet::find(const MultiIndex& a) const {
  if (static_cast<int>(a.size()) != n_) return -1;
  for (int v : a)
    if (v < 0) return -1;
  auto it = lookup_.find(key(a));
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> MultiIndexSet::level(int l) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (degree(list_[i]) == l) out.push_back(i);
  return out;
}

int MultiIndexSet::level_count(int l) const { return static_cast<int>(level(l).size()); }

int MultiIndexSet::neighbor(int i, int axis, int delta) const {
  MultiIndex a = list_[i];
  a[axis] += delta;
  if (a[axis] < 0) return -1;
  return find(a);
}

}  // namespace kfp

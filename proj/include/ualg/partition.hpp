#pragma once

#include <string>
#include <vector>

#include "ualg/error.hpp"

namespace ualg {

// Partition of {0..n-1} as a union-find forest. Canonical form: every element
// points at the minimum of its block; blocks ordered by their minima.
class Partition {
 public:
  Partition() = default;
  explicit Partition(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  static Partition zero(int n) { return Partition(n); }
  static Partition one(int n) {
    Partition p(n);
    for (int i = 1; i < n; ++i) p.unite(0, i);
    p.normalize();
    return p;
  }

  int size() const { return (int)parent_.size(); }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool same(int x, int y) const { return find(x) == find(y); }
  // returns true if a merge happened
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep min as root
    parent_[y] = x;
    return true;
  }

  // min-rooted representative array; also usable as a hash/equality key
  void normalize() {
    for (int i = 0; i < size(); ++i) parent_[i] = find(i);
  }
  std::vector<int> canonical() const {
    std::vector<int> rep(size());
    for (int i = 0; i < size(); ++i) rep[i] = find(i);
    return rep;
  }

  bool operator==(const Partition& o) const { return canonical() == o.canonical(); }
  bool leq(const Partition& o) const {  // refinement order
    for (int i = 0; i < size(); ++i)
      if (!o.same(i, find(i))) return false;
    return true;
  }

  int num_blocks() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
  // blocks sorted by minimum element; elements ascending
  std::vector<std::vector<int>> blocks() const;
  // block index of each element, blocks numbered by ascending minima
  std::vector<int> block_index() const;

  std::string format() const;                        // "0,2|1,3"
  static Partition parse(const std::string& text, int n);

 private:
  mutable std::vector<int> parent_;
};

Partition meet(const Partition& a, const Partition& b);

}  // namespace ualg

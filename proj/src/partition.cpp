#include "ualg/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ualg {

std::vector<std::vector<int>> Partition::blocks() const {
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < size(); ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<int> Partition::block_index() const {
  std::vector<int> roots;
  for (int i = 0; i < size(); ++i)
    if (find(i) == i) roots.push_back(i);
  std::vector<int> idx(size());
  for (int i = 0; i < size(); ++i) {
    int r = find(i);
    idx[i] = (int)(std::lower_bound(roots.begin(), roots.end(), r) - roots.begin());
  }
  return idx;
}

std::string Partition::format() const {
  std::ostringstream os;
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) os << "|";
    for (size_t i = 0; i < bs[b].size(); ++i) {
      if (i) os << ",";
      os << bs[b][i];
    }
  }
  return os.str();
}

Partition Partition::parse(const std::string& text, int n) {
  Partition p(n);
  std::vector<char> seen(n, 0);
  int prev = -1;
  int value = -1;
  bool have = false;
  auto flush = [&]() {
    if (!have) throw Error("partition parse: empty element");
    if (value < 0 || value >= n) throw Error("partition parse: element out of range");
    if (seen[value]) throw Error("partition parse: repeated element");
    seen[value] = 1;
    if (prev >= 0) p.unite(prev, value);
    prev = value;
    value = -1;
    have = false;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = (have ? value * 10 : 0) + (c - '0');
      have = true;
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      prev = -1;
    } else if (c == ' ' || c == '\t') {
      continue;
    } else {
      throw Error(std::string("partition parse: unexpected character '") + c + "'");
    }
  }
  flush();
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Error("partition parse: element " + std::to_string(i) + " missing");
  p.normalize();
  return p;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("meet: carrier mismatch");
  Partition out(a.size());
  std::map<std::pair<int, int>, int> first_seen;
  for (int i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.find(i), b.find(i));
    auto it = first_seen.find(key);
    if (it == first_seen.end())
      first_seen.emplace(key, i);
    else
      out.unite(it->second, i);
  }
  out.normalize();
  return out;
}

}  // namespace ualg

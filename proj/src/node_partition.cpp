#include "congkit/node_partition.hpp"

#include <numeric>

namespace congkit {

  NodePartition::NodePartition(size_t n) : _parent(n), _rank(n, 0), _parts(n) {
    std::iota(_parent.begin(), _parent.end(), 0);
  }

  node_type NodePartition::find(node_type x) const {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool NodePartition::unite(node_type x, node_type y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_rank[x] < _rank[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    if (_rank[x] == _rank[y]) {
      ++_rank[x];
    }
    --_parts;
    return true;
  }

  std::vector<node_type> NodePartition::normal_form() const {
    std::vector<node_type> least(_parent.size(), UNDEFINED);
    std::vector<node_type> out(_parent.size());
    for (node_type i = 0; i < _parent.size(); ++i) {
      auto r = find(i);
      if (least[r] == UNDEFINED) {
        least[r] = i;
      }
      out[i] = least[r];
    }
    return out;
  }

}  // namespace congkit

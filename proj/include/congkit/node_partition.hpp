//
// Disjoint sets (union-find) over the nodes of a word graph or of a
// disjoint union of word graphs.

#ifndef CONGKIT_NODE_PARTITION_HPP_
#define CONGKIT_NODE_PARTITION_HPP_

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace congkit {

  //! Union by rank with path halving. Single writer.
  class NodePartition {
   public:
    NodePartition() = default;
    explicit NodePartition(size_t n);

    node_type find(node_type x) const;

    //! Returns true if x and y were in different parts.
    bool unite(node_type x, node_type y);

    size_t size() const {
      return _parent.size();
    }

    size_t number_of_parts() const {
      return _parts;
    }

    //! The partition as a vector mapping each node to the least node in its
    //! part; two NodePartitions are equal as partitions iff these agree.
    std::vector<node_type> normal_form() const;

   private:
    mutable std::vector<node_type> _parent;
    std::vector<uint8_t>           _rank;
    size_t                         _parts = 0;
  };

}  // namespace congkit

#endif  // CONGKIT_NODE_PARTITION_HPP_

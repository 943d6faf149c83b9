//
// Word graphs: deterministic-automaton-like graphs with edges labelled by
// letters of an alphabet, no initial or accept states. A standard complete
// deterministic word graph compatible with the defining relations, with
// every node reachable from node 0, represents a right congruence; node 0
// is the class of the identity.

#ifndef CONGKIT_WORD_GRAPH_HPP_
#define CONGKIT_WORD_GRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "node_partition.hpp"
#include "presentation.hpp"
#include "types.hpp"

namespace congkit {

  struct FiniteMonoid;
  struct CongruencePartition;

  class WordGraph {
   public:
    struct Edge {
      node_type   source;
      letter_type label;
      node_type   target;
      auto        operator<=>(Edge const&) const = default;
    };

    //! The empty graph (0 nodes, 0 edges); the search-exhausted sentinel.
    WordGraph() = default;
    WordGraph(uint32_t alphabet_size, uint32_t number_of_nodes);

    uint32_t alphabet_size() const {
      return _alphabet_size;
    }
    uint32_t number_of_nodes() const {
      return _number_of_nodes;
    }
    bool empty() const {
      return _number_of_nodes == 0;
    }

    //! Edges in insertion order; the order is significant to the search
    //! (states are truncated to "the first j edges") but not to equality.
    std::vector<Edge> const& edges() const {
      return _edges;
    }

    void add_nodes(uint32_t count);

    //! Appends an edge. Adding a second edge with the same source and label
    //! (and a different target) makes the graph non-deterministic; exact
    //! duplicates are ignored.
    void add_edge(node_type source, letter_type label, node_type target);

    // Low-level operations used by the low-index search, which repeatedly
    // truncates a graph to "the first j edges" and a given node count.
    void reserve(uint32_t nodes, uint32_t edges);
    void remove_last_edge();
    void shrink_to_nodes(uint32_t count);

    //! First target of (s, a), or UNDEFINED. Unique when deterministic.
    node_type target(node_type s, letter_type a) const {
      return _targets[size_t(s) * _alphabet_size + a];
    }

    bool is_deterministic() const {
      return !_nondeterministic;
    }

    //! Every (node, letter) has at least one edge.
    bool is_complete() const;

    //! Equality as labelled graphs: alphabet, node count and edge set;
    //! insertion order and duplicates are ignored.
    bool operator==(WordGraph const& that) const;

    //! Nodes unreachable from `start` (empty if all reachable).
    std::vector<node_type> unreachable_nodes(node_type start = 0) const;

    //! Row-major (node, letter, target) byte string; canonical for standard
    //! graphs. Requires a deterministic graph.
    std::string canonical_key() const;

   private:
    uint32_t               _alphabet_size   = 0;
    uint32_t               _number_of_nodes = 0;
    std::vector<Edge>      _edges;
    std::vector<node_type> _targets;
    bool                   _nondeterministic = false;
  };

  //! Target of the path labelled by w from `start`, or nullopt if some edge
  //! on the way is undefined; the empty word returns `start`. Requires a
  //! deterministic graph; letters out of range are an error.
  std::optional<node_type>
  follow_path(WordGraph const& g, node_type start, word_type const& w);

  //! True iff for every node and every relation (u, v), u and v trace to
  //! the same node. Relation instances in which either side fails to trace
  //! are ignored, so on complete graphs this is exactly compatibility.
  bool is_compatible(WordGraph const& g, Presentation const& p);

  //! Relabels nodes so that they are ordered by the short-lex order of
  //! their minimal access words from node 0; the unique standard graph
  //! isomorphic to g via a bijection fixing 0. Requires deterministic and
  //! all nodes reachable from 0.
  WordGraph standardize(WordGraph const& g);

  bool is_standard(WordGraph const& g);

  //! Two standard complete deterministic graphs represent the same right
  //! congruence iff they are equal verbatim; throws on non-standard input.
  bool equal_as_congruences(WordGraph const& g0, WordGraph const& g1);

  //! The unique homomorphism g0 -> g1 with 0 -> 0, by breadth-first
  //! propagation, or nullopt if none exists. Exists iff the congruence of
  //! g0 is contained in the congruence of g1.
  std::optional<std::vector<node_type>>
  homomorphism_fixing_zero(WordGraph const& g0, WordGraph const& g1);

  //! g0 and g1 side by side, g1's nodes relabelled upwards; second member
  //! is the offset added to g1's nodes.
  std::pair<WordGraph, node_type> disjoint_union(WordGraph const& g0,
                                                 WordGraph const& g1);

  //! One node per part of kappa; edges are images of g's edges with exact
  //! duplicates removed, in first-insertion order. May be non-deterministic.
  WordGraph quotient(WordGraph const& g, NodePartition const& kappa);

  //! Partition of M's elements where x, y lie together iff their minimal
  //! words trace from node 0 to the same node of g. Requires g compatible
  //! with M's defining relations.
  CongruencePartition congruence_classes_of_word_graph(WordGraph const& g,
                                                       FiniteMonoid const& M);

  //! The word graph of a total single-valued action table, standardized at
  //! `basepoint`, or nullopt if some node is unreachable from it (in which
  //! case the action is not the action on the classes of a right
  //! congruence).
  std::optional<WordGraph>
  action_to_word_graph(std::vector<std::vector<node_type>> const& table,
                       node_type                                  basepoint);

  //! A finite restriction of the path relation at `basepoint`: all words of
  //! length <= max_length together with the node they trace to (words that
  //! do not trace are omitted).
  struct PathRelationSample {
    node_type                                basepoint;
    std::vector<std::pair<word_type, node_type>> traced;

    //! True iff both words trace and land on the same node.
    bool related(word_type const& u, word_type const& v) const;
    std::vector<std::pair<word_type, word_type>> pairs() const;
  };

  PathRelationSample path_relation_sample(WordGraph const& g,
                                          node_type        basepoint,
                                          size_t           max_length);

}  // namespace congkit

#endif  // CONGKIT_WORD_GRAPH_HPP_

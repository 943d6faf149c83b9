#include "congkit/lattice_ops.hpp"

#include <vector>

namespace congkit {

  WordGraph join_word_graphs(WordGraph const& g0, WordGraph const& g1) {
    if (g0.alphabet_size() != g1.alphabet_size()) {
      throw InputError("alphabet sizes differ");
    }
    if (!g0.is_deterministic() || !g1.is_deterministic() || !g0.is_complete()
        || !g1.is_complete()) {
      throw InputError("join requires complete deterministic word graphs");
    }
    auto [du, offset] = disjoint_union(g0, g1);
    NodePartition kappa(du.number_of_nodes());
    std::vector<std::pair<node_type, node_type>> stack;
    kappa.unite(0, offset);
    stack.emplace_back(0, offset);
    while (!stack.empty()) {
      auto [a0, a1] = stack.back();
      stack.pop_back();
      for (letter_type a = 0; a < du.alphabet_size(); ++a) {
        auto t0 = kappa.find(du.target(a0, a));
        auto t1 = kappa.find(du.target(a1, a));
        if (t0 != t1) {
          kappa.unite(t0, t1);
          stack.emplace_back(t0, t1);
        }
      }
    }
    auto q = quotient(du, kappa);
    if (!q.is_deterministic()) {
      throw InputError("join produced a non-deterministic quotient; the "
                       "inputs were not congruence word graphs");
    }
    return standardize(q);
  }

  WordGraph join_word_graphs(WordGraph const& g0, WordGraph const& g1,
                             Presentation const& p) {
    if (!is_compatible(g0, p) || !is_compatible(g1, p)) {
      throw InputError("join input is not compatible with the presentation");
    }
    return join_word_graphs(g0, g1);
  }

  WordGraph meet_word_graphs(WordGraph const& g0, WordGraph const& g1) {
    if (g0.alphabet_size() != g1.alphabet_size()) {
      throw InputError("alphabet sizes differ");
    }
    if (!g0.is_deterministic() || !g1.is_deterministic() || !g0.is_complete()
        || !g1.is_complete()) {
      throw InputError("meet requires complete deterministic word graphs");
    }
    auto const m  = g0.alphabet_size();
    auto const n1 = g1.number_of_nodes();
    // discovery-order labels for the reachable part of the product
    std::vector<node_type> label(size_t(g0.number_of_nodes()) * n1,
                                 UNDEFINED);
    std::vector<std::pair<node_type, node_type>> nodes;
    label[0] = 0;
    nodes.emplace_back(0, 0);
    std::vector<WordGraph::Edge> edges;
    for (node_type v = 0; v < nodes.size(); ++v) {
      auto [x, y] = nodes[v];
      for (letter_type a = 0; a < m; ++a) {
        auto   tx   = g0.target(x, a);
        auto   ty   = g1.target(y, a);
        size_t cell = size_t(tx) * n1 + ty;
        if (label[cell] == UNDEFINED) {
          label[cell] = static_cast<node_type>(nodes.size());
          nodes.emplace_back(tx, ty);
        }
        edges.push_back({v, a, label[cell]});
      }
    }
    WordGraph out(m, static_cast<uint32_t>(nodes.size()));
    for (auto const& e : edges) {
      out.add_edge(e.source, e.label, e.target);
    }
    return out;
  }

  bool contains_congruence(WordGraph const& g0, WordGraph const& g1) {
    return homomorphism_fixing_zero(g0, g1).has_value();
  }

  LatticeOps<WordGraph> word_graph_lattice_ops() {
    LatticeOps<WordGraph> ops;
    ops.join = [](WordGraph const& a, WordGraph const& b) {
      return join_word_graphs(a, b);
    };
    ops.meet = [](WordGraph const& a, WordGraph const& b) {
      return meet_word_graphs(a, b);
    };
    ops.leq = [](WordGraph const& a, WordGraph const& b) {
      return contains_congruence(a, b);
    };
    ops.key = [](WordGraph const& g) { return g.canonical_key(); };
    return ops;
  }

}  // namespace congkit

//
// Joins and meets of congruences represented by word graphs, containment,
// and assembly of congruence lattices by join closure. The lattice builder
// is generic: it is used both for word-graph congruences and for
// congruence partitions of a concrete finite monoid.

#ifndef CONGKIT_LATTICE_OPS_HPP_
#define CONGKIT_LATTICE_OPS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "presentation.hpp"
#include "types.hpp"
#include "word_graph.hpp"

namespace congkit {

  //! Join of the congruences of g0 and g1: the least right invariant node
  //! partition of their disjoint union containing (0, 0), computed with a
  //! stack and union-find in the manner of the Hopcroft-Karp equivalence
  //! check, then quotient and standardize. Inputs must be complete and
  //! deterministic over the same alphabet.
  WordGraph join_word_graphs(WordGraph const& g0, WordGraph const& g1);

  //! As above, also checking both inputs against the presentation the
  //! congruences live over.
  WordGraph join_word_graphs(WordGraph const& g0, WordGraph const& g1,
                             Presentation const& p);

  //! Meet: the part of the product graph reachable from (0, 0), nodes
  //! numbered in discovery order (already standard).
  WordGraph meet_word_graphs(WordGraph const& g0, WordGraph const& g1);

  //! Congruence of g0 contained in that of g1 (iff a homomorphism g0 -> g1
  //! fixing 0 exists).
  bool contains_congruence(WordGraph const& g0, WordGraph const& g1);

  template <typename T>
  struct CongruenceLattice {
    //! Pairwise distinct, sorted by LatticeOps::key.
    std::vector<T> elements;
    //! Transitive reduction of containment, as (lower, upper) index pairs.
    std::vector<std::pair<uint32_t, uint32_t>> covers;
  };

  template <typename T>
  struct LatticeOps {
    std::function<T(T const&, T const&)>         join;
    std::function<T(T const&, T const&)>         meet;  // unused by closure
    std::function<bool(T const&, T const&)>      leq;
    std::function<std::string(T const&)>         key;
  };

  //! Closes `generators` under binary join, optionally adds the given
  //! bottom and top, and computes the cover relation from containment.
  template <typename T>
  CongruenceLattice<T>
  lattice_from_generators(std::vector<T> const& generators,
                          LatticeOps<T> const&  ops,
                          std::optional<T>      bottom = std::nullopt,
                          std::optional<T>      top    = std::nullopt) {
    std::vector<T>                          elems;
    std::unordered_map<std::string, size_t> seen;
    auto insert = [&](T const& x) -> bool {
      auto [it, fresh] = seen.emplace(ops.key(x), elems.size());
      if (fresh) {
        elems.push_back(x);
      }
      return fresh;
    };
    for (auto const& g : generators) {
      insert(g);
    }
    // frontier of the join closure
    std::vector<size_t> fresh_idx(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
      fresh_idx[i] = i;
    }
    while (!fresh_idx.empty()) {
      std::vector<size_t> next;
      for (auto i : fresh_idx) {
        for (size_t j = 0; j < elems.size(); ++j) {
          if (i == j) {
            continue;
          }
          auto v = ops.join(elems[i], elems[j]);
          if (insert(v)) {
            next.push_back(elems.size() - 1);
          }
        }
      }
      fresh_idx = std::move(next);
    }
    if (bottom) {
      insert(*bottom);
    }
    if (top) {
      insert(*top);
    }

    CongruenceLattice<T> lattice;
    lattice.elements = std::move(elems);
    std::sort(lattice.elements.begin(), lattice.elements.end(),
              [&](T const& a, T const& b) { return ops.key(a) < ops.key(b); });

    auto const n = lattice.elements.size();
    // containment matrix, then transitive reduction
    std::vector<bool> lt(n * n, false);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i != j && ops.leq(lattice.elements[i], lattice.elements[j])) {
          lt[i * n + j] = true;
        }
      }
    }
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (!lt[i * n + j]) {
          continue;
        }
        bool cover = true;
        for (size_t k = 0; k < n && cover; ++k) {
          if (lt[i * n + k] && lt[k * n + j]) {
            cover = false;
          }
        }
        if (cover) {
          lattice.covers.emplace_back(static_cast<uint32_t>(i),
                                      static_cast<uint32_t>(j));
        }
      }
    }
    return lattice;
  }

  //! Ops instance for word-graph congruences of one presentation.
  LatticeOps<WordGraph> word_graph_lattice_ops();

}  // namespace congkit

#endif  // CONGKIT_LATTICE_OPS_HPP_

//
// The low-index congruence search: a backtrack search through standard
// complete deterministic word graphs compatible with the defining
// relations, yielding every right (or left) congruence with at most n
// classes exactly once, while holding a single graph in memory.

#ifndef CONGKIT_LOW_INDEX_HPP_
#define CONGKIT_LOW_INDEX_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "presentation.hpp"
#include "types.hpp"
#include "word_graph.hpp"

namespace congkit {

  //! A deferred edge plus the coordinates needed to backtrack: before the
  //! edge is applied the graph is truncated to `num_nodes` nodes and its
  //! first `num_edges` edges. target <= num_nodes; equality creates a node.
  struct PendingDefinition {
    node_type   source;
    letter_type label;
    node_type   target;
    node_type   num_nodes;
    uint32_t    num_edges;
    bool        operator==(PendingDefinition const&) const = default;
  };

  enum class CongruenceSide { right, left };

  struct SearchConfig {
    CongruenceSide side        = CongruenceSide::right;
    uint32_t       max_classes = 1;
    //! Semigroup presentations: congruences of S via word graphs of S^1 in
    //! which no edge targets node 0. max_classes counts classes of S, so
    //! the node budget is max_classes + 1.
    bool semigroup_mode = false;
    //! Restrict to congruences containing these word pairs.
    std::vector<std::pair<word_type, word_type>> containing;
    //! Abort with BudgetError after this many search steps (0 = unlimited).
    //! A step is one pending definition taken off the stack.
    uint64_t step_budget = 0;
    //! Use the full node-by-relation rescan instead of the incremental
    //! check restricted to relation instances through new edges. Slow; kept
    //! as an oracle for the incremental path.
    bool full_rescan = false;
  };

  struct SearchState {
    WordGraph                      graph;
    std::vector<PendingDefinition> stack;
    uint32_t                       max_classes = 1;
    uint64_t                       steps       = 0;
    size_t                         peak_stack  = 0;
  };

  //! Deduction closure: propagates the defining relations through g,
  //! appending every forced edge. Returns 0 if some relation forces two
  //! distinct targets from one node (g is then useless to the caller), and
  //! the new number of edges otherwise. Requires a deterministic graph with
  //! at least one edge.
  size_t compatible_incremental(Presentation const& p, WordGraph& g,
                                bool full_rescan = false);

  //! The state at the root of the search tree (graph {0} with no edges and
  //! the seed definitions on the stack).
  SearchState initial_search_state(Presentation const& p,
                                   SearchConfig const& cfg);

  //! Returns true iff state.graph is complete, compatible, and (when
  //! cfg.containing is nonempty) every required pair traces from 0 to a
  //! common node. When the graph is compatible but incomplete, pushes one
  //! PendingDefinition per candidate target of the first missing edge slot
  //! and returns false.
  bool try_define_edge(Presentation const& p, SearchConfig const& cfg,
                       SearchState& st);

  //! Pops pending definitions, truncating and extending the graph, until
  //! try_define_edge succeeds (returns that graph) or the stack empties
  //! (returns nullopt and leaves the empty-graph sentinel in the state).
  std::optional<WordGraph> next_right_congruence(Presentation const& p,
                                                 SearchConfig const& cfg,
                                                 SearchState&        st);

  namespace detail {
    class Engine;
  }

  //! Lazy stream over all congruence word graphs; owns one SearchState, so
  //! the space used is proportional to alphabet size times max_classes.
  class CongruenceStream {
   public:
    CongruenceStream(Presentation p, SearchConfig cfg);
    ~CongruenceStream();
    CongruenceStream(CongruenceStream&&) noexcept;

    std::optional<WordGraph> next();

    SearchState const& state() const {
      return _state;
    }

   private:
    friend void for_each_congruence(
        Presentation const&, SearchConfig const&,
        std::function<bool(WordGraph const&)> const&);

    std::unique_ptr<detail::Engine> _engine;
    SearchState                     _state;
    bool                            _exhausted;
    bool                            _empty_alphabet_pending;
  };

  //! Calls fn on each congruence graph in search order without copying;
  //! return false from fn to stop early.
  void for_each_congruence(Presentation const& p, SearchConfig const& cfg,
                           std::function<bool(WordGraph const&)> const& fn);

  uint64_t count_congruences(Presentation const& p, SearchConfig const& cfg);

  //! Same multiset of congruences as the serial stream, explored by
  //! `threads` workers each owning an independent SearchState; work moves
  //! between workers as subtree roots (stack-bottom pending definitions).
  uint64_t parallel_count_congruences(Presentation const& p,
                                      SearchConfig const& cfg,
                                      uint32_t            threads);

  //! Parallel visitor; fn may be called from several threads at once and
  //! must synchronise its own state. No early stop.
  void parallel_for_each_congruence(
      Presentation const& p, SearchConfig const& cfg, uint32_t threads,
      std::function<void(WordGraph const&)> const& fn);

}  // namespace congkit

#endif  // CONGKIT_LOW_INDEX_HPP_

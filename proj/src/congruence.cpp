#include "congkit/congruence.hpp"

#include <algorithm>
#include <unordered_set>

#include "congkit/node_partition.hpp"
#include "congkit/rel_greens.hpp"
#include "congkit/word_graph.hpp"

namespace congkit {

  CongruencePartition CongruencePartition::trivial(uint32_t n) {
    CongruencePartition p;
    p.class_of.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
      p.class_of[i] = i;
    }
    return p;
  }

  CongruencePartition CongruencePartition::universal(uint32_t n) {
    CongruencePartition p;
    p.class_of.assign(n, 0);
    return p;
  }

  size_t CongruencePartition::number_of_classes() const {
    size_t k = 0;
    for (uint32_t i = 0; i < class_of.size(); ++i) {
      if (class_of[i] == i) {
        ++k;
      }
    }
    return k;
  }

  std::string CongruencePartition::key() const {
    return std::string(reinterpret_cast<char const*>(class_of.data()),
                       class_of.size() * sizeof(uint32_t));
  }

  namespace {
    CongruencePartition from_dsu(NodePartition const& dsu) {
      CongruencePartition p;
      p.class_of = dsu.normal_form();
      return p;
    }
  }  // namespace

  CongruencePartition principal_congruence(FiniteMonoid const& M, uint32_t x,
                                           uint32_t y, Side side) {
    if (x >= M.size || y >= M.size) {
      throw InputError("pair element out of range");
    }
    NodePartition dsu(M.size);
    std::vector<std::pair<uint32_t, uint32_t>> worklist;
    if (dsu.unite(x, y)) {
      worklist.emplace_back(x, y);
    }
    bool do_right = side != Side::left;
    bool do_left  = side != Side::right;
    while (!worklist.empty()) {
      auto [a, b] = worklist.back();
      worklist.pop_back();
      for (letter_type l = 0; l < M.num_letters; ++l) {
        if (do_right) {
          auto u = M.right(a, l), v = M.right(b, l);
          if (dsu.unite(u, v)) {
            worklist.emplace_back(u, v);
          }
        }
        if (do_left) {
          auto u = M.left(a, l), v = M.left(b, l);
          if (dsu.unite(u, v)) {
            worklist.emplace_back(u, v);
          }
        }
      }
    }
    return from_dsu(dsu);
  }

  std::vector<CongruencePartition> distinct_principal_congruences(
      FiniteMonoid const& M, Side side,
      std::vector<std::pair<uint32_t, uint32_t>> const* pairs) {
    std::vector<CongruencePartition> out;
    std::unordered_set<std::string>  seen;
    auto handle = [&](uint32_t x, uint32_t y) {
      if (x == y) {
        return;
      }
      auto p = principal_congruence(M, x, y, side);
      if (seen.insert(p.key()).second) {
        out.push_back(std::move(p));
      }
    };
    if (pairs != nullptr) {
      for (auto const& [x, y] : *pairs) {
        handle(x, y);
      }
    } else {
      for (uint32_t x = 0; x < M.size; ++x) {
        for (uint32_t y = x + 1; y < M.size; ++y) {
          handle(x, y);
        }
      }
    }
    return out;
  }

  CongruencePartition join_partitions(CongruencePartition const& p,
                                      CongruencePartition const& q) {
    if (p.size() != q.size()) {
      throw InputError("partition sizes differ");
    }
    NodePartition dsu(p.size());
    for (uint32_t i = 0; i < p.size(); ++i) {
      dsu.unite(i, p.class_of[i]);
      dsu.unite(i, q.class_of[i]);
    }
    return from_dsu(dsu);
  }

  bool partition_leq(CongruencePartition const& p,
                     CongruencePartition const& q) {
    if (p.size() != q.size()) {
      throw InputError("partition sizes differ");
    }
    for (uint32_t i = 0; i < p.size(); ++i) {
      if (q.class_of[i] != q.class_of[p.class_of[i]]) {
        return false;
      }
    }
    return true;
  }

  bool is_compatible_partition(FiniteMonoid const& M,
                               CongruencePartition const& p, Side side) {
    bool do_right = side != Side::left;
    bool do_left  = side != Side::right;
    for (uint32_t x = 0; x < M.size; ++x) {
      auto y = p.class_of[x];
      if (y == x) {
        continue;
      }
      for (letter_type l = 0; l < M.num_letters; ++l) {
        if (do_right
            && p.class_of[M.right(x, l)] != p.class_of[M.right(y, l)]) {
          return false;
        }
        if (do_left
            && p.class_of[M.left(x, l)] != p.class_of[M.left(y, l)]) {
          return false;
        }
      }
    }
    return true;
  }

  CongruenceLattice<CongruencePartition>
  congruence_lattice(FiniteMonoid const& M, Side side, bool reduce_greens) {
    std::vector<CongruencePartition> principals;
    if (reduce_greens) {
      auto pairs = reduced_generating_pairs(M, side);
      principals = distinct_principal_congruences(M, side, &pairs);
    } else {
      principals = distinct_principal_congruences(M, side);
    }
    LatticeOps<CongruencePartition> ops;
    ops.join = join_partitions;
    ops.meet = nullptr;
    ops.leq  = partition_leq;
    ops.key  = [](CongruencePartition const& p) { return p.key(); };
    return lattice_from_generators(principals, ops,
                                   CongruencePartition::trivial(M.size),
                                   CongruencePartition::universal(M.size));
  }

  namespace {
    // restricted growth strings enumerate all set partitions; recursion is
    // fine at the tiny sizes this oracle is used for
    template <typename F>
    void set_partitions_rec(std::vector<uint32_t>& rgs, uint32_t i,
                            uint32_t max_block, F& fn) {
      if (i == rgs.size()) {
        fn(rgs);
        return;
      }
      for (uint32_t b = 0; b <= max_block + 1; ++b) {
        rgs[i] = b;
        set_partitions_rec(rgs, i + 1, std::max(max_block, b), fn);
      }
    }

    template <typename F>
    void for_each_set_partition(uint32_t n, F&& fn) {
      if (n == 0) {
        return;
      }
      std::vector<uint32_t> rgs(n, 0);
      set_partitions_rec(rgs, 1, 0, fn);
    }
  }  // namespace

  uint64_t brute_force_congruence_count(FiniteMonoid const& M, Side side) {
    uint64_t count = 0;
    for_each_set_partition(M.size, [&](std::vector<uint32_t> const& rgs) {
      // normalise block ids to least members
      CongruencePartition p;
      p.class_of.resize(rgs.size());
      std::vector<uint32_t> least(rgs.size(), UNDEFINED);
      for (uint32_t i = 0; i < rgs.size(); ++i) {
        if (least[rgs[i]] == UNDEFINED) {
          least[rgs[i]] = i;
        }
        p.class_of[i] = least[rgs[i]];
      }
      if (is_compatible_partition(M, p, side)) {
        ++count;
      }
    });
    return count;
  }

  CongruencePartition
  congruence_classes_of_word_graph(WordGraph const& g, FiniteMonoid const& M) {
    if (!is_compatible(g, M.presentation)) {
      throw InputError("word graph is incompatible with the defining "
                       "relations of the monoid");
    }
    if (!g.is_complete() || !g.is_deterministic()) {
      throw InputError("word graph must be complete and deterministic");
    }
    NodePartition dsu(M.size);
    std::vector<uint32_t> rep_of_node(g.number_of_nodes(), UNDEFINED);
    for (uint32_t x = 0; x < M.size; ++x) {
      auto node = *follow_path(g, 0, M.words[x]);
      if (rep_of_node[node] == UNDEFINED) {
        rep_of_node[node] = x;
      } else {
        dsu.unite(rep_of_node[node], x);
      }
    }
    CongruencePartition p;
    p.class_of = dsu.normal_form();
    return p;
  }

}  // namespace congkit

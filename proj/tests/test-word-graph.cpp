#include <doctest.h>

#include <algorithm>

#include "congkit/io.hpp"
#include "congkit/word_graph.hpp"

using namespace congkit;

namespace {

  WordGraph cycle_graph(uint32_t length) {
    WordGraph g(1, length);
    for (node_type v = 0; v < length; ++v) {
      g.add_edge(v, 0, (v + 1) % length);
    }
    return g;
  }

  WordGraph loop_graph() {
    WordGraph g(1, 1);
    g.add_edge(0, 0, 0);
    return g;
  }

}  // namespace

TEST_CASE("follow_path") {
  auto g = loop_graph();
  CHECK(follow_path(g, 0, {0, 0, 0}) == 0);
  CHECK(follow_path(g, 0, {}) == 0);

  WordGraph h(2, 2);
  h.add_edge(0, 0, 1);
  CHECK(follow_path(h, 0, {0, 1}) == std::nullopt);  // (1, b) missing
  CHECK_THROWS_AS(follow_path(h, 0, {7}), InputError);

  // step-by-step oracle on the mod-3 cycle
  auto      c3 = cycle_graph(3);
  node_type v  = 0;
  for (int i = 0; i < 4; ++i) {
    v = c3.target(v, 0);
  }
  CHECK(follow_path(c3, 0, {0, 0, 0, 0}) == v);
  CHECK(v == 1);
}

TEST_CASE("follow_path splits at any prefix") {
  WordGraph g(2, 3);
  g.add_edge(0, 0, 1);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 0, 2);
  g.add_edge(1, 1, 0);
  g.add_edge(2, 0, 0);
  g.add_edge(2, 1, 2);
  std::vector<word_type> words = {{}, {0}, {1}, {0, 1}, {1, 0, 1}, {0, 0, 1, 1}};
  for (auto const& u : words) {
    for (auto const& w : words) {
      auto uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      CHECK(follow_path(g, 0, uw) == follow_path(g, *follow_path(g, 0, u), w));
    }
  }
}

TEST_CASE("is_compatible") {
  Presentation p(1);
  p.add_relation({0, 0}, {0});  // aa = a
  CHECK(is_compatible(loop_graph(), p));
  CHECK_FALSE(is_compatible(cycle_graph(2), p));
  CHECK(is_compatible(cycle_graph(2), Presentation(1)));  // vacuous

  Presentation q(2);
  CHECK_THROWS_AS(is_compatible(loop_graph(), q), InputError);
}

TEST_CASE("standardize: relabels to short-lex order of access words") {
  // nodes {0,1,2} with (0,b,1),(0,a,2) plus loops: standard order demands
  // the a-target before the b-target, so 1 and 2 swap
  WordGraph g(2, 3);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 0, 2);
  g.add_edge(1, 0, 1);
  g.add_edge(1, 1, 1);
  g.add_edge(2, 0, 2);
  g.add_edge(2, 1, 2);
  auto s = standardize(g);
  CHECK(s.target(0, 0) == 1);
  CHECK(s.target(0, 1) == 2);
  CHECK_FALSE(is_standard(g));
  CHECK(is_standard(s));
  CHECK(standardize(s) == s);  // idempotent

  CHECK(standardize(loop_graph()) == loop_graph());
  CHECK(is_standard(WordGraph()));  // the empty sentinel

  WordGraph un(1, 2);
  un.add_edge(0, 0, 0);  // node 1 unreachable
  CHECK_THROWS_AS(standardize(un), InputError);
}

TEST_CASE("standardize is invariant under relabelling fixing 0") {
  WordGraph g(2, 4);
  g.add_edge(0, 0, 1);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 0, 3);
  g.add_edge(1, 1, 1);
  g.add_edge(2, 0, 2);
  g.add_edge(2, 1, 3);
  g.add_edge(3, 0, 0);
  g.add_edge(3, 1, 2);
  auto canon = standardize(g);
  // every permutation of {1,2,3}
  std::vector<node_type> perm = {1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<node_type> sigma = {0, perm[0], perm[1], perm[2]};
    WordGraph              h(2, 4);
    for (auto const& e : g.edges()) {
      h.add_edge(sigma[e.source], e.label, sigma[e.target]);
    }
    CHECK(equal_as_congruences(standardize(h), canon));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("equal_as_congruences") {
  auto c2 = cycle_graph(2), c3 = cycle_graph(3);
  CHECK(equal_as_congruences(c2, c2));
  CHECK_FALSE(equal_as_congruences(c2, c3));
  // non-standard input is refused
  WordGraph g(2, 3);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 0, 2);
  g.add_edge(1, 0, 1);
  g.add_edge(1, 1, 1);
  g.add_edge(2, 0, 2);
  g.add_edge(2, 1, 2);
  CHECK_THROWS_AS(equal_as_congruences(g, g), InputError);
}

TEST_CASE("homomorphism_fixing_zero") {
  auto c6 = cycle_graph(6), c2 = cycle_graph(2), c3 = cycle_graph(3);

  auto id = homomorphism_fixing_zero(c6, c6);
  REQUIRE(id.has_value());
  for (node_type v = 0; v < 6; ++v) {
    CHECK((*id)[v] == v);
  }

  auto phi = homomorphism_fixing_zero(c6, c2);
  REQUIRE(phi.has_value());
  for (node_type v = 0; v < 6; ++v) {
    CHECK((*phi)[v] == v % 2);
  }
  // edge preservation, directly
  for (auto const& e : c6.edges()) {
    CHECK(c2.target((*phi)[e.source], e.label) == (*phi)[e.target]);
  }

  CHECK_FALSE(homomorphism_fixing_zero(c2, c3).has_value());

  // mutual homomorphisms imply equality of standardized graphs
  CHECK(homomorphism_fixing_zero(c2, c2).has_value());
}

TEST_CASE("disjoint_union") {
  auto [g, off] = disjoint_union(WordGraph(1, 0), loop_graph());
  CHECK(off == 0);
  CHECK(g == loop_graph());

  auto [two, off2] = disjoint_union(loop_graph(), loop_graph());
  CHECK(off2 == 1);
  CHECK(two.number_of_nodes() == 2);
  CHECK(two.edges().size() == 2);
  CHECK(two.target(1, 0) == 1);

  auto [u, off3] = disjoint_union(cycle_graph(2), cycle_graph(3));
  CHECK(off3 == 2);
  CHECK(u.number_of_nodes() == 5);
  CHECK(u.target(2, 0) == 3);
  CHECK(u.target(4, 0) == 2);
}

TEST_CASE("quotient") {
  auto c6 = cycle_graph(6);

  NodePartition identity(6);
  CHECK(quotient(c6, identity) == c6);

  NodePartition universal(6);
  for (node_type v = 1; v < 6; ++v) {
    universal.unite(0, v);
  }
  auto q = quotient(c6, universal);
  CHECK(q.number_of_nodes() == 1);
  CHECK(q.target(0, 0) == 0);
  CHECK(q.edges().size() == 1);  // duplicates removed

  NodePartition mod2(6);
  for (node_type v = 0; v < 6; ++v) {
    mod2.unite(v % 2, v);
  }
  CHECK(quotient(c6, mod2) == cycle_graph(2));
}

TEST_CASE("quotient determinism iff right invariant (small graphs)") {
  // all partitions of the nodes of small complete graphs
  std::vector<WordGraph> graphs = {cycle_graph(3), cycle_graph(4),
                                   cycle_graph(5)};
  {
    WordGraph g(2, 4);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 0, 3);
    g.add_edge(1, 1, 0);
    g.add_edge(2, 0, 2);
    g.add_edge(2, 1, 3);
    g.add_edge(3, 0, 1);
    g.add_edge(3, 1, 3);
    graphs.push_back(g);
  }
  for (auto const& g : graphs) {
    auto const n = g.number_of_nodes();
    // enumerate set partitions by restricted growth strings
    std::vector<uint32_t> rgs(n, 0);
    auto                  right_invariant = [&](NodePartition const& k) {
      for (node_type a = 0; a < n; ++a) {
        for (node_type b = 0; b < n; ++b) {
          if (k.find(a) != k.find(b)) {
            continue;
          }
          for (letter_type l = 0; l < g.alphabet_size(); ++l) {
            if (k.find(g.target(a, l)) != k.find(g.target(b, l))) {
              return false;
            }
          }
        }
      }
      return true;
    };
    // recursive enumeration
    auto run = [&](auto&& self, uint32_t i, uint32_t mx) -> void {
      if (i == n) {
        NodePartition k(n);
        for (uint32_t v = 0; v < n; ++v) {
          for (uint32_t w = v + 1; w < n; ++w) {
            if (rgs[v] == rgs[w]) {
              k.unite(v, w);
            }
          }
        }
        CHECK(quotient(g, k).is_deterministic() == right_invariant(k));
        return;
      }
      for (uint32_t b = 0; b <= mx + 1; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(mx, b));
      }
    };
    run(run, 1, 0);
  }
}

TEST_CASE("action_to_word_graph: the two faithful actions") {
  // right actions of a 4x4 rectangular band with adjoined identity, letter
  // order a, b, c, d, identity
  std::vector<std::vector<node_type>> seven = {
      {1, 2, 3, 4, 0}, {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {3, 5, 3, 5, 3},
      {6, 4, 6, 4, 4}, {5, 5, 3, 3, 5}, {6, 4, 6, 4, 6}};
  auto g = action_to_word_graph(seven, 0);
  REQUIRE(g.has_value());
  CHECK(g->number_of_nodes() == 7);
  CHECK(g->is_complete());
  CHECK(is_standard(*g));

  std::vector<std::vector<node_type>> six = {
      {2, 3, 4, 5, 0}, {4, 2, 4, 5, 1}, {2, 2, 5, 5, 2},
      {4, 3, 4, 3, 3}, {4, 3, 4, 3, 4}, {2, 2, 5, 5, 5}};
  for (node_type base = 0; base < 6; ++base) {
    CHECK_FALSE(action_to_word_graph(six, base).has_value());
  }

  std::vector<std::vector<node_type>> one = {{0}};
  auto                                lg  = action_to_word_graph(one, 0);
  REQUIRE(lg.has_value());
  CHECK(*lg == loop_graph());
}

TEST_CASE("path_relation_sample") {
  auto c2     = cycle_graph(2);
  auto sample = path_relation_sample(c2, 0, 4);
  CHECK(sample.related({}, {0, 0}));
  CHECK(sample.related({0}, {0, 0, 0}));
  CHECK_FALSE(sample.related({0}, {0, 0}));
  // reflexive and symmetric on traced words
  for (auto const& [w, node] : sample.traced) {
    CHECK(sample.related(w, w));
  }
  auto pairs = sample.pairs();
  for (auto const& [u, v] : pairs) {
    CHECK(sample.related(v, u));
  }
}

TEST_CASE("word graph JSON round trip is byte-exact") {
  auto c3   = cycle_graph(3);
  auto text = word_graph_to_json(c3);
  CHECK(text
        == R"({"alphabet":1,"edges":[[0,0,1],[1,0,2],[2,0,0]],"nodes":3})");
  CHECK(word_graph_from_json(text) == c3);
  CHECK(word_graph_to_json(word_graph_from_json(text)) == text);
  CHECK_THROWS_AS(word_graph_from_json("{"), InputError);
  CHECK_THROWS_AS(word_graph_from_json("{\"alphabet\":1}"), InputError);
}

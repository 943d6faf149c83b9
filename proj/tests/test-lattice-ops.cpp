#include <doctest.h>

#include <numeric>
#include <vector>

#include "congkit/congruence.hpp"
#include "congkit/finite_monoid.hpp"
#include "congkit/fixtures.hpp"
#include "congkit/lattice_ops.hpp"
#include "congkit/low_index.hpp"

using namespace congkit;

namespace {

  WordGraph cycle_graph(uint32_t length) {
    WordGraph g(1, length);
    for (node_type v = 0; v < length; ++v) {
      g.add_edge(v, 0, (v + 1) % length);
    }
    return g;
  }

  WordGraph universal_graph(uint32_t alphabet) {
    WordGraph g(alphabet, 1);
    for (letter_type a = 0; a < alphabet; ++a) {
      g.add_edge(0, a, 0);
    }
    return g;
  }

}  // namespace

TEST_CASE("join_word_graphs") {
  auto c2 = cycle_graph(2), c3 = cycle_graph(3);
  CHECK(join_word_graphs(c2, c2) == c2);
  CHECK(join_word_graphs(c2, universal_graph(1)) == universal_graph(1));
  // free monogenic monoid: gcd(2, 3) = 1 so the join is universal
  CHECK(join_word_graphs(c2, c3) == universal_graph(1));
  CHECK(join_word_graphs(c3, c2) == join_word_graphs(c2, c3));

  Presentation free1(1);
  CHECK(join_word_graphs(c2, c3, free1) == universal_graph(1));

  WordGraph incomplete(1, 2);
  incomplete.add_edge(0, 0, 1);
  CHECK_THROWS_AS(join_word_graphs(incomplete, c2), InputError);
}

TEST_CASE("meet_word_graphs") {
  auto c2 = cycle_graph(2), c3 = cycle_graph(3), c6 = cycle_graph(6);
  CHECK(meet_word_graphs(c2, c2) == c2);
  CHECK(meet_word_graphs(c2, universal_graph(1)) == c2);
  CHECK(meet_word_graphs(c2, c3) == c6);  // lcm(2, 3) states
  CHECK(is_standard(meet_word_graphs(c2, c3)));
}

TEST_CASE("meet path relation is the intersection (cycle pairs)") {
  for (uint32_t p = 1; p <= 6; ++p) {
    for (uint32_t q = 1; q <= 6; ++q) {
      auto m = meet_word_graphs(cycle_graph(p), cycle_graph(q));
      CHECK(m.number_of_nodes() == std::lcm(p, q));
      CHECK(is_standard(m));
    }
  }
}

TEST_CASE("contains_congruence") {
  auto c2 = cycle_graph(2), c3 = cycle_graph(3), c6 = cycle_graph(6);
  CHECK(contains_congruence(c2, c2));
  CHECK(contains_congruence(c6, c2));   // mod 6 refines mod 2
  CHECK_FALSE(contains_congruence(c2, c3));
  CHECK(contains_congruence(meet_word_graphs(c2, c3), c2));
  CHECK(contains_congruence(c2, join_word_graphs(c2, c3)));
}

TEST_CASE("lattice laws on the congruences of a small monoid") {
  // all right congruences of the partition monoid P2 up to 4 classes: a
  // handy pool of compatible word graphs over one presentation
  Presentation p(3);
  p.add_relation({0, 0}, {});
  p.add_relation({0, 2}, {2});
  p.add_relation({1, 1}, {1});
  p.add_relation({2, 0}, {2});
  p.add_relation({2, 2}, {2});
  p.add_relation({1, 2, 1}, {1});
  p.add_relation({2, 1, 2}, {2});
  p.add_relation({0, 1, 0, 1}, {1, 0, 1});
  p.add_relation({1, 0, 1, 0}, {1, 0, 1});

  std::vector<WordGraph> pool;
  SearchConfig           cfg;
  cfg.max_classes = 4;
  for_each_congruence(p, cfg, [&](WordGraph const& g) {
    pool.push_back(g);
    return true;
  });
  REQUIRE(pool.size() >= 5);

  for (auto const& a : pool) {
    CHECK(join_word_graphs(a, a) == a);
    CHECK(meet_word_graphs(a, a) == a);
    for (auto const& b : pool) {
      auto j = join_word_graphs(a, b);
      auto m = meet_word_graphs(a, b);
      CHECK(j == join_word_graphs(b, a));
      CHECK(m == meet_word_graphs(b, a));
      CHECK(join_word_graphs(a, m) == a);  // absorption
      CHECK(meet_word_graphs(a, j) == a);
      CHECK(contains_congruence(a, j));
      CHECK(contains_congruence(m, a));
      for (auto const& c : pool) {
        CHECK(join_word_graphs(join_word_graphs(a, b), c)
              == join_word_graphs(a, join_word_graphs(b, c)));
      }
    }
  }
}

TEST_CASE("join is the least enumerated upper bound") {
  // on the free monogenic monoid restricted to <= 12 classes
  Presentation free1(1);
  SearchConfig cfg;
  cfg.max_classes = 12;
  std::vector<WordGraph> all;
  for_each_congruence(free1, cfg, [&](WordGraph const& g) {
    all.push_back(g);
    return true;
  });
  auto c2 = cycle_graph(2), c3 = cycle_graph(3);
  auto j = join_word_graphs(c2, c3);
  for (auto const& g : all) {
    if (contains_congruence(c2, g) && contains_congruence(c3, g)) {
      CHECK(contains_congruence(j, g));
    }
  }
}

TEST_CASE("lattice_from_generators over word graphs") {
  auto ops = word_graph_lattice_ops();

  // join closure of {trivial-ish singleton}: degenerate
  auto lat0 = lattice_from_generators<WordGraph>(
      {cycle_graph(2)}, ops, std::nullopt,
      std::make_optional(universal_graph(1)));
  CHECK(lat0.elements.size() == 2);
  REQUIRE(lat0.covers.size() == 1);

  // {mod 2, mod 3} closes to {mod 2, mod 3, mod 1}; bottom mod 6 supplied
  auto lat = lattice_from_generators<WordGraph>(
      {cycle_graph(2), cycle_graph(3)}, ops,
      std::make_optional(cycle_graph(6)), std::nullopt);
  CHECK(lat.elements.size() == 4);
  // covers: 6 < 2, 6 < 3, 2 < 1, 3 < 1
  CHECK(lat.covers.size() == 4);
}

TEST_CASE("lattice_from_generators over partitions matches word graphs") {
  auto M = froidure_pin(catalan_generators(3));
  CHECK(M.size == 5);
  auto lat = congruence_lattice(M, Side::right);

  SearchConfig cfg;
  cfg.max_classes = M.size;
  CHECK(count_congruences(M.presentation, cfg) == lat.elements.size());
  CHECK(lat.elements.size() == 11);
}

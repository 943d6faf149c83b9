#include <doctest.h>

#include <mutex>
#include <random>
#include <set>
#include <unordered_set>

#include "congkit/congruence.hpp"
#include "congkit/finite_monoid.hpp"
#include "congkit/fixtures.hpp"
#include "congkit/low_index.hpp"

using namespace congkit;

namespace {

  Presentation p2_presentation() {
    // partition monoid of degree 2 (self-dual: relations equal their
    // reverses as a set)
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
    return p;
  }

}  // namespace

TEST_CASE("compatible_incremental") {
  Presentation p(1);
  p.add_relation({0, 0}, {0});

  WordGraph loop(1, 1);
  loop.add_edge(0, 0, 0);
  CHECK(compatible_incremental(p, loop) == 1);

  WordGraph c2(1, 2);
  c2.add_edge(0, 0, 1);
  c2.add_edge(1, 0, 0);
  CHECK(compatible_incremental(p, c2) == 0);

  // deduction: <a, b | a = b> forces (0, b, 1) from (0, a, 1)
  Presentation q(2);
  q.add_relation({0}, {1});
  WordGraph g(2, 2);
  g.add_edge(0, 0, 1);
  CHECK(compatible_incremental(q, g) == 2);
  CHECK(g.target(0, 1) == 1);
  CHECK(is_compatible(g, q));

  // the naive full rescan agrees
  WordGraph h(2, 2);
  h.add_edge(0, 0, 1);
  CHECK(compatible_incremental(q, h, true) == 2);
  CHECK(h == g);

  WordGraph empty(1, 1);
  CHECK_THROWS_AS(compatible_incremental(p, empty), InputError);
}

TEST_CASE("initial_search_state follows the seeding rules") {
  Presentation p(2);
  SearchConfig cfg;
  cfg.max_classes = 3;
  auto st         = initial_search_state(p, cfg);
  CHECK(st.graph.number_of_nodes() == 1);
  CHECK(st.graph.edges().empty());
  REQUIRE(st.stack.size() == 2);
  CHECK(st.stack[0] == PendingDefinition{0, 0, 0, 1, 0});
  CHECK(st.stack[1] == PendingDefinition{0, 0, 1, 1, 0});

  cfg.max_classes = 1;
  auto st1        = initial_search_state(p, cfg);
  REQUIRE(st1.stack.size() == 1);
  CHECK(st1.stack[0] == PendingDefinition{0, 0, 0, 1, 0});

  cfg.max_classes    = 3;
  cfg.semigroup_mode = true;
  auto st2           = initial_search_state(p, cfg);
  REQUIRE(st2.stack.size() == 1);
  CHECK(st2.stack[0] == PendingDefinition{0, 0, 1, 1, 0});
}

TEST_CASE("try_define_edge pushes candidate targets of the first hole") {
  Presentation p(2);
  SearchConfig cfg;
  cfg.max_classes = 2;
  SearchState st;
  st.graph = WordGraph(2, 1);
  st.graph.add_edge(0, 0, 0);
  st.max_classes = 2;

  CHECK_FALSE(try_define_edge(p, cfg, st));
  REQUIRE(st.stack.size() == 2);
  CHECK(st.stack[0] == PendingDefinition{0, 1, 0, 1, 1});
  CHECK(st.stack[1] == PendingDefinition{0, 1, 1, 1, 1});

  // complete and compatible: true, nothing pushed
  Presentation free1(1);
  SearchConfig cfg1;
  cfg1.max_classes = 2;
  SearchState st1;
  st1.graph = WordGraph(1, 1);
  st1.graph.add_edge(0, 0, 0);
  CHECK(try_define_edge(free1, cfg1, st1));
  CHECK(st1.stack.empty());

  // incompatible: false with nothing pushed
  Presentation sq(1);
  sq.add_relation({0, 0}, {0});
  SearchState st2;
  st2.graph = WordGraph(1, 2);
  st2.graph.add_edge(0, 0, 1);
  st2.graph.add_edge(1, 0, 0);
  CHECK_FALSE(try_define_edge(sq, cfg1, st2));
  CHECK(st2.stack.empty());
}

TEST_CASE("next_right_congruence") {
  Presentation free1(1);

  SearchConfig cfg;
  cfg.max_classes = 1;
  auto st         = initial_search_state(free1, cfg);
  auto g          = next_right_congruence(free1, cfg, st);
  REQUIRE(g.has_value());
  CHECK(g->number_of_nodes() == 1);
  CHECK(g->target(0, 0) == 0);
  CHECK_FALSE(next_right_congruence(free1, cfg, st).has_value());
  CHECK(st.graph.empty());  // the sentinel

  // <a | aa = a> at n = 2: exactly two congruences, absent on call three
  Presentation sq(1);
  sq.add_relation({0, 0}, {0});
  cfg.max_classes = 2;
  auto st2        = initial_search_state(sq, cfg);
  CHECK(next_right_congruence(sq, cfg, st2).has_value());
  CHECK(next_right_congruence(sq, cfg, st2).has_value());
  CHECK_FALSE(next_right_congruence(sq, cfg, st2).has_value());

  // <a | > at n = 2: three graphs
  auto st3        = initial_search_state(free1, cfg);
  std::set<std::string> keys;
  while (auto h = next_right_congruence(free1, cfg, st3)) {
    keys.insert(h->canonical_key());
  }
  CHECK(keys.size() == 3);
}

TEST_CASE("count_congruences on small presentations") {
  Presentation free1(1);
  SearchConfig cfg;
  cfg.max_classes = 2;
  CHECK(count_congruences(free1, cfg) == 3);
  cfg.max_classes = 50;
  CHECK(count_congruences(free1, cfg) == 1275);  // sum over tail+cycle shapes

  auto p2         = p2_presentation();
  cfg.max_classes = 15;
  CHECK(count_congruences(p2, cfg) == 105);
  cfg.max_classes = 17;  // saturates
  CHECK(count_congruences(p2, cfg) == 105);

  // empty alphabet: the trivial monoid has one right congruence
  cfg.max_classes = 3;
  CHECK(count_congruences(Presentation(0), cfg) == 1);
}

TEST_CASE("every yielded graph is standard complete compatible") {
  auto         p = p2_presentation();
  SearchConfig cfg;
  cfg.max_classes = 5;
  std::unordered_set<std::string> seen;
  for_each_congruence(p, cfg, [&](WordGraph const& g) {
    CHECK(g.is_deterministic());
    CHECK(g.is_complete());
    CHECK(g.number_of_nodes() <= 5);
    CHECK(is_standard(g));
    CHECK(is_compatible(g, p));
    CHECK(g.unreachable_nodes(0).empty());
    CHECK(seen.insert(g.canonical_key()).second);  // no repeats
    return true;
  });
  CHECK_FALSE(seen.empty());
}

TEST_CASE("left mode equals right mode on the reversed presentation") {
  Presentation p(2);
  p.add_relation({0, 1, 1}, {1});
  p.add_relation({0, 0}, {0});
  SearchConfig right_cfg, left_cfg;
  right_cfg.max_classes = left_cfg.max_classes = 6;
  left_cfg.side                                = CongruenceSide::left;
  auto reversed_p                              = reverse(p);
  CHECK(count_congruences(p, left_cfg)
        == count_congruences(reversed_p, right_cfg));

  // palindromic (self-reverse) presentations have equal counts
  auto p2 = p2_presentation();
  right_cfg.max_classes = left_cfg.max_classes = 15;
  CHECK(count_congruences(p2, left_cfg) == 105);
}

TEST_CASE("semigroup mode") {
  // the trivial semigroup {a} with a^2 = a has exactly one right congruence
  Presentation p(1);
  p.add_relation({0, 0}, {0});
  p.kind = PresentationKind::semigroup;
  SearchConfig cfg;
  cfg.semigroup_mode = true;
  cfg.max_classes    = 1;
  CHECK(count_congruences(p, cfg) == 1);
  cfg.max_classes = 4;
  CHECK(count_congruences(p, cfg) == 1);

  // free monogenic semigroup: 3 right congruences with at most 2 classes
  Presentation f(1);
  f.kind = PresentationKind::semigroup;
  cfg.max_classes = 2;
  CHECK(count_congruences(f, cfg) == 3);

  // no emitted graph has an edge into node 0
  cfg.max_classes = 3;
  for_each_congruence(f, cfg, [&](WordGraph const& g) {
    for (auto const& e : g.edges()) {
      CHECK(e.target != 0);
    }
    return true;
  });
}

TEST_CASE("containing pairs restrict the enumeration") {
  auto p = p2_presentation();

  SearchConfig plain;
  plain.max_classes = 15;

  SearchConfig restricted  = plain;
  restricted.containing    = {{{0}, {}}};  // b ~ empty word

  // oracle: filter the unrestricted stream by tracing the pair
  uint64_t expected = 0;
  for_each_congruence(p, plain, [&](WordGraph const& g) {
    if (follow_path(g, 0, {0}) == follow_path(g, 0, {})) {
      ++expected;
    }
    return true;
  });
  CHECK(expected > 0);
  CHECK(count_congruences(p, restricted) == expected);

  // the universal congruence contains everything
  SearchConfig top = restricted;
  top.max_classes  = 1;
  CHECK(count_congruences(p, top) == 1);
}

TEST_CASE("step budget aborts cleanly") {
  auto         p = p2_presentation();
  SearchConfig cfg;
  cfg.max_classes = 15;
  cfg.step_budget = 50;
  CHECK_THROWS_AS(count_congruences(p, cfg), BudgetError);
  CHECK_THROWS_AS(parallel_count_congruences(p, cfg, 2), BudgetError);
}

TEST_CASE("full rescan oracle agrees with the incremental check") {
  auto         p = p2_presentation();
  SearchConfig fast, slow;
  fast.max_classes = slow.max_classes = 6;
  slow.full_rescan                    = true;
  CHECK(count_congruences(p, fast) == count_congruences(p, slow));
}

TEST_CASE("parallel counts are thread invariant") {
  auto         p = p2_presentation();
  SearchConfig cfg;
  cfg.max_classes = 15;
  auto serial     = count_congruences(p, cfg);
  for (uint32_t threads : {1u, 2u, 4u}) {
    CHECK(parallel_count_congruences(p, cfg, threads) == serial);
  }

  // and the multiset of graphs is the same, by canonical keys
  std::set<std::string> serial_keys;
  for_each_congruence(p, cfg, [&](WordGraph const& g) {
    serial_keys.insert(g.canonical_key());
    return true;
  });
  std::mutex            mx;
  std::set<std::string> parallel_keys;
  bool                  dup = false;
  parallel_for_each_congruence(p, cfg, 4, [&](WordGraph const& g) {
    std::lock_guard<std::mutex> lock(mx);
    dup |= !parallel_keys.insert(g.canonical_key()).second;
  });
  CHECK_FALSE(dup);
  CHECK(parallel_keys == serial_keys);
}

TEST_CASE("low-index count equals brute force on random tiny monoids") {
  std::mt19937 rng(314159);
  int          done = 0;
  while (done < 12) {
    std::vector<Transformation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<uint32_t> img(3);
      for (auto& x : img) {
        x = rng() % 3;
      }
      gens.emplace_back(img);
    }
    auto M = froidure_pin(gens);
    if (M.size > 6) {
      continue;
    }
    ++done;
    SearchConfig cfg;
    cfg.max_classes = M.size;
    CAPTURE(M.size);
    CHECK(count_congruences(M.presentation, cfg)
          == brute_force_congruence_count(M, Side::right));
  }
}

TEST_CASE("catalan C4 has 575 right congruences") {
  auto         M = froidure_pin(catalan_generators(4));
  CHECK(M.size == 14);
  SearchConfig cfg;
  cfg.max_classes = 14;
  CHECK(count_congruences(M.presentation, cfg) == 575);
}

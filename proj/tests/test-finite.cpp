#include <doctest.h>

#include <random>
#include <set>

#include "congkit/congruence.hpp"
#include "congkit/finite_monoid.hpp"
#include "congkit/fixtures.hpp"
#include "congkit/io.hpp"
#include "congkit/low_index.hpp"
#include "congkit/word_graph.hpp"

using namespace congkit;

TEST_CASE("froidure_pin sizes of standard families") {
  CHECK(froidure_pin({Transformation::identity(3)}).size == 1);
  CHECK(froidure_pin(catalan_generators(1)).size == 1);
  CHECK(froidure_pin(catalan_generators(2)).size == 2);
  CHECK(froidure_pin(catalan_generators(3)).size == 5);
  CHECK(froidure_pin(catalan_generators(4)).size == 14);
  CHECK(froidure_pin(catalan_generators(5)).size == 42);
  CHECK(froidure_pin(order_preserving_generators(3)).size == 10);
  CHECK(froidure_pin(order_preserving_generators(4)).size == 35);
  CHECK(froidure_pin(full_transformation_generators(3)).size == 27);
  CHECK(froidure_pin(symmetric_group_generators(4)).size == 24);
  CHECK(froidure_pin(symmetric_group_generators(5)).size == 120);
  CHECK(froidure_pin(symmetric_inverse_generators(3)).size == 34);
  CHECK(froidure_pin(partial_transformation_generators(3)).size == 64);
}

TEST_CASE("froidure_pin matrix monoids") {
  auto gl = froidure_pin(gl3_f2_generators());
  CHECK(gl.size == 512);  // the whole of M_3(F_2)
  auto f7 = froidure_pin(f7_det01_generators());
  CHECK(f7.size == 721);  // 2x2 over F_7 with determinant 0 or 1
}

TEST_CASE("froidure_pin structure invariants") {
  auto M = froidure_pin(full_transformation_generators(3));
  CHECK(M.words[0].empty());
  CHECK_FALSE(M.identity_adjoined);  // the 3-cycle powers give the identity

  // evaluating each word through the right Cayley graph returns its element
  for (uint32_t x = 0; x < M.size; ++x) {
    CHECK(M.evaluate(M.words[x]) == x);
  }

  // the presentation's relations hold in the multiplication
  for (auto const& [u, v] : M.presentation.relations) {
    CHECK(M.evaluate(u) == M.evaluate(v));
  }

  // left and right Cayley graphs agree with products
  for (uint32_t x = 0; x < M.size; ++x) {
    for (uint32_t a = 0; a < M.num_letters; ++a) {
      CHECK(M.right(x, a) == M.product(x, M.generators[a]));
      CHECK(M.left(x, a) == M.product(M.generators[a], x));
    }
  }
}

TEST_CASE("words are short-lex minimal (exhaustive up to |M| = 50)") {
  for (auto gens : {catalan_generators(4), order_preserving_generators(3),
                    symmetric_inverse_generators(2)}) {
    auto M = froidure_pin(gens);
    REQUIRE(M.size <= 50);
    // breadth-first over all words in short-lex order: the first word
    // evaluating to x must equal words[x]
    std::vector<bool>      found(M.size, false);
    std::vector<word_type> frontier = {{}};
    size_t                 remaining = M.size;
    while (remaining > 0) {
      std::vector<word_type> next;
      for (auto const& w : frontier) {
        auto x = M.evaluate(w);
        if (!found[x]) {
          found[x] = true;
          --remaining;
          CHECK(M.words[x] == w);
        }
        for (uint32_t a = 0; a < M.num_letters; ++a) {
          auto wa = w;
          wa.push_back(a);
          next.push_back(std::move(wa));
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("identity adjunction flag") {
  // the Catalan generators never multiply back to the identity
  CHECK(froidure_pin(catalan_generators(3)).identity_adjoined);
  // a group: identity is a product
  CHECK_FALSE(froidure_pin(symmetric_group_generators(3)).identity_adjoined);
}

TEST_CASE("from_table validates and builds") {
  // the 2-element monoid {1, a} with a^2 = a
  std::vector<std::vector<uint32_t>> table = {{0, 1}, {1, 1}};
  auto                               M     = from_table(table, {}, true);
  CHECK(M.size == 2);
  CHECK(M.num_letters == 1);
  CHECK(M.right(1, 0) == 1);

  // element 0 must be an identity
  std::vector<std::vector<uint32_t>> bad = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(from_table(bad), InputError);

  // non-associative table is rejected when checking is on
  std::vector<std::vector<uint32_t>> nonassoc
      = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  CHECK_THROWS_AS(from_table(nonassoc, {}, true), InputError);
}

TEST_CASE("principal_congruence") {
  auto M = froidure_pin(catalan_generators(3));

  // a diagonal pair generates the trivial congruence
  CHECK(principal_congruence(M, 1, 1, Side::right)
        == CongruencePartition::trivial(M.size));

  // worklist closure by hand on {1, a}: (1, a) forces everything together
  std::vector<std::vector<uint32_t>> table = {{0, 1}, {1, 1}};
  auto                               two   = from_table(table);
  CHECK(principal_congruence(two, 0, 1, Side::right)
        == CongruencePartition::universal(2));

  // compatibility of the output on its side
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    uint32_t x = rng() % M.size, y = rng() % M.size;
    for (auto side : {Side::right, Side::left, Side::twosided}) {
      auto p = principal_congruence(M, x, y, side);
      CHECK(is_compatible_partition(M, p, side));
    }
  }
}

TEST_CASE("distinct principal congruence counts from the tables") {
  CHECK(distinct_principal_congruences(froidure_pin(catalan_generators(4)),
                                       Side::right)
            .size()
        == 67);
  CHECK(distinct_principal_congruences(froidure_pin(catalan_generators(5)),
                                       Side::right)
            .size()
        == 641);
  CHECK(distinct_principal_congruences(
            froidure_pin(order_preserving_generators(3)), Side::right)
            .size()
        == 18);
}

TEST_CASE("join_partitions") {
  auto p = CongruencePartition::trivial(4);
  CHECK(join_partitions(p, p) == p);

  CongruencePartition a, b;
  a.class_of = {0, 0, 2, 2};  // {0,1 | 2,3}
  b.class_of = {0, 1, 1, 3};  // {0 | 1,2 | 3}
  CHECK(join_partitions(a, p) == a);
  // crossing 2-class partitions of a 4-set join to the universal one
  CongruencePartition c, d;
  c.class_of = {0, 0, 2, 2};
  d.class_of = {0, 1, 0, 1};
  CHECK(join_partitions(c, d) == CongruencePartition::universal(4));
  CHECK(join_partitions(c, d) == join_partitions(d, c));

  CHECK(partition_leq(c, join_partitions(c, d)));
  CHECK(partition_leq(a, a));
}

TEST_CASE("congruence_lattice small cases") {
  auto t3 = froidure_pin(full_transformation_generators(3));
  CHECK(congruence_lattice(t3, Side::twosided).elements.size() == 7);

  auto trivial = froidure_pin({Transformation::identity(2)});
  CHECK(congruence_lattice(trivial, Side::right).elements.size() == 1);
}

TEST_CASE("reduce_greens gives byte-identical lattices") {
  for (auto M : {froidure_pin(catalan_generators(3)),
                 froidure_pin(order_preserving_generators(3)),
                 froidure_pin(symmetric_group_generators(3))}) {
    for (auto side : {Side::right, Side::left, Side::twosided}) {
      auto plain   = congruence_lattice(M, side, false);
      auto reduced = congruence_lattice(M, side, true);
      CHECK(lattice_to_json(plain) == lattice_to_json(reduced));
    }
  }
}

TEST_CASE("congruence_classes_of_word_graph") {
  auto M = froidure_pin(catalan_generators(3));

  // the one-node graph gives the universal partition
  WordGraph top(M.num_letters, 1);
  for (letter_type a = 0; a < M.num_letters; ++a) {
    top.add_edge(0, a, 0);
  }
  CHECK(congruence_classes_of_word_graph(top, M)
        == CongruencePartition::universal(M.size));

  // the right Cayley graph gives the trivial partition
  WordGraph cayley(M.num_letters, M.size);
  for (uint32_t x = 0; x < M.size; ++x) {
    for (letter_type a = 0; a < M.num_letters; ++a) {
      cayley.add_edge(x, a, M.right(x, a));
    }
  }
  CHECK(congruence_classes_of_word_graph(standardize(cayley), M)
        == CongruencePartition::trivial(M.size));

  // right compatibility of every induced partition
  SearchConfig cfg;
  cfg.max_classes = M.size;
  for_each_congruence(M.presentation, cfg, [&](WordGraph const& g) {
    CHECK(is_compatible_partition(M, congruence_classes_of_word_graph(g, M),
                                  Side::right));
    return true;
  });

  // incompatible graph is refused
  Presentation pinc(M.num_letters);
  WordGraph    c2(M.num_letters, 2);
  for (letter_type a = 0; a < M.num_letters; ++a) {
    c2.add_edge(0, a, 1);
    c2.add_edge(1, a, 0);
  }
  CHECK_THROWS_AS(congruence_classes_of_word_graph(c2, M), InputError);
}

TEST_CASE("low-index, brute force and lattice pipeline all agree") {
  std::mt19937 rng(20240701);
  int          done = 0;
  std::set<std::string> shapes;
  while (done < 15) {
    std::vector<Transformation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<uint32_t> img(3);
      for (auto& v : img) {
        v = rng() % 3;
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
    auto low_index  = count_congruences(M.presentation, cfg);
    auto brute      = brute_force_congruence_count(M, Side::right);
    auto lattice    = congruence_lattice(M, Side::right).elements.size();
    CHECK(low_index == brute);
    CHECK(lattice == brute);
  }
}

TEST_CASE("the monoid of a word graph congruence count bridges sides") {
  // left congruence count on M equals right count on the dual presentation
  auto M = froidure_pin(catalan_generators(3));
  SearchConfig cfg;
  cfg.max_classes = M.size;
  cfg.side        = CongruenceSide::left;
  auto left_count = count_congruences(M.presentation, cfg);
  CHECK(left_count == brute_force_congruence_count(M, Side::left));
}

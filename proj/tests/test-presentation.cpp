#include <doctest.h>

#include <algorithm>

#include "congkit/presentation.hpp"

using namespace congkit;

TEST_CASE("shortlex: length first, then lexicographic") {
  CHECK(shortlex_compare({0}, {0, 0}) == Ordering::less);
  CHECK(shortlex_compare({0, 1}, {1, 0}) == Ordering::less);
  CHECK(shortlex_compare({1, 0}, {0, 1}) == Ordering::greater);
  CHECK(shortlex_compare({}, {}) == Ordering::equal);
  CHECK(shortlex_compare({}, {0}) == Ordering::less);
}

TEST_CASE("shortlex: sorting words of length <= 3 over {a,b}") {
  std::vector<word_type> words;
  for (uint32_t len = 0; len <= 3; ++len) {
    for (uint32_t bits = 0; bits < (1u << len); ++bits) {
      word_type w;
      for (uint32_t i = 0; i < len; ++i) {
        w.push_back((bits >> (len - 1 - i)) & 1);
      }
      words.push_back(w);
    }
  }
  auto sorted = words;
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  // enumeration above is already in short-lex order
  CHECK(sorted == words);
  CHECK(sorted.front() == word_type{});
  CHECK(sorted[1] == word_type{0});
  CHECK(sorted[2] == word_type{1});
  CHECK(sorted[3] == word_type{0, 0});
  CHECK(sorted[4] == word_type{0, 1});
  CHECK(sorted[5] == word_type{1, 0});
  // total order: irreflexive, antisymmetric on distinct words
  for (auto const& u : words) {
    for (auto const& v : words) {
      if (u == v) {
        CHECK(shortlex_compare(u, v) == Ordering::equal);
      } else {
        CHECK(shortlex_less(u, v) != shortlex_less(v, u));
      }
    }
  }
}

TEST_CASE("reverse: relations reversed, involution") {
  Presentation p(2);
  p.add_relation({0, 1}, {0});  // ab = a
  auto q = reverse(p);
  CHECK(q.relations[0].first == word_type{1, 0});
  CHECK(q.relations[0].second == word_type{0});
  CHECK(reverse(q) == p);

  // palindromic relations are fixed
  Presentation pal(1);
  pal.add_relation({0, 0, 0}, {0});
  CHECK(reverse(pal).relations == pal.relations);
}

TEST_CASE("presentation_length") {
  Presentation p(1);
  p.add_relation({0, 0}, {0});
  CHECK(presentation_length(p) == 3);

  // (2,3,7)-triangle monoid: x^2, y^3, (xy)^7 all equal to the empty word
  Presentation t(2);
  t.add_relation({0, 0}, {});
  t.add_relation({1, 1, 1}, {});
  t.add_relation(word_type{0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, {});
  CHECK(presentation_length(t) == 2 + 3 + 14);

  CHECK(presentation_length(Presentation(4)) == 0);
}

TEST_CASE("parse: basic presentation") {
  auto p = parse_presentation("alphabet: a\nrelation: aa = a\n");
  CHECK(p.alphabet_size == 1);
  CHECK(p.kind == PresentationKind::monoid);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0] == std::pair<word_type, word_type>{{0, 0}, {0}});
}

TEST_CASE("parse: comments, kind, empty word") {
  auto p = parse_presentation("# a comment\n"
                              "alphabet: ab\n"
                              "kind: semigroup\n"
                              "relation: ab = 1  # trailing\n");
  CHECK(p.kind == PresentationKind::semigroup);
  CHECK(p.relations[0].second.empty());
  CHECK(p.has_empty_word_relation());
}

TEST_CASE("parse: inverses expand to relations") {
  auto p = parse_presentation("alphabet: xXyY\ninverses: xX yY\n");
  CHECK(p.alphabet_size == 4);
  REQUIRE(p.relations.size() == 4);
  CHECK(p.relations[0] == std::pair<word_type, word_type>{{0, 1}, {}});
  CHECK(p.relations[1] == std::pair<word_type, word_type>{{1, 0}, {}});
}

TEST_CASE("parse: errors carry line numbers") {
  CHECK_THROWS_AS(parse_presentation("alphabet: a\nrelation: ab = a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("relation: a = a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("alphabet: a1\n"), ParseError);
  try {
    parse_presentation("alphabet: a\nnonsense\n");
    CHECK(false);
  } catch (ParseError const& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("serialize then parse is the identity") {
  auto text = "alphabet: ab\nrelation: aa = a\nrelation: bab = b\n";
  auto p    = parse_presentation(text);
  CHECK(serialize_presentation(p) == text);
  CHECK(parse_presentation(serialize_presentation(p)) == p);

  // with inverses the expansion round-trips, not the original text
  auto q = parse_presentation("alphabet: xX\ninverses: xX\n");
  CHECK(parse_presentation(serialize_presentation(q)) == q);
}

TEST_CASE("validate rejects out-of-range letters") {
  Presentation p(1);
  p.add_relation({0, 1}, {0});
  CHECK_THROWS_AS(p.validate(), InputError);
}

//
// Words, short-lex order, and monoid/semigroup presentations, together with
// the text format used by the fixtures and the CLI.

#ifndef CONGKIT_PRESENTATION_HPP_
#define CONGKIT_PRESENTATION_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace congkit {

  enum class PresentationKind { monoid, semigroup };

  //! A finite presentation <A | R>. Relations are stored as pairs of words
  //! over 0-based letter indices; the presented monoid A*/R# is never
  //! materialised. `letters` holds one printable character per letter and is
  //! only used by the text format.
  struct Presentation {
    uint32_t                                alphabet_size = 0;
    std::vector<std::pair<word_type, word_type>> relations;
    PresentationKind                        kind = PresentationKind::monoid;
    std::string                             letters;

    Presentation() = default;
    explicit Presentation(uint32_t m) : alphabet_size(m) {
      letters = default_letter_names(m);
    }

    Presentation& add_relation(word_type lhs, word_type rhs);

    //! Throws InputError if a relation uses a letter >= alphabet_size.
    void validate() const;

    //! True if kind is semigroup and some relation equates a nonempty word
    //! with the empty word (legal but usually a mistake).
    bool has_empty_word_relation() const;

    bool operator==(Presentation const&) const;

    static std::string default_letter_names(uint32_t m);
  };

  enum class Ordering { less, equal, greater };

  //! Short-lex: first by length, then lexicographically by letter index.
  Ordering shortlex_compare(word_type const& u, word_type const& v);
  bool     shortlex_less(word_type const& u, word_type const& v);

  word_type reversed(word_type const& w);

  //! Reverses every relation word; an involution. A word graph compatible
  //! with the reversed relations represents a left congruence of the
  //! original monoid.
  Presentation reverse(Presentation const& p);

  //! Sum of the lengths of all relation words.
  size_t presentation_length(Presentation const& p);

  // Text format, one declaration per line:
  //   alphabet: <letters>
  //   inverses: <pairs>          (optional; "xX yY" adds xX=Xx=1 etc.)
  //   kind: monoid|semigroup     (optional; default monoid)
  //   relation: <word> = <word>  (the empty word is written 1)
  // '#' starts a comment; blank lines are ignored.
  Presentation parse_presentation(std::string const& text);
  Presentation parse_presentation_file(std::string const& path);
  std::string  serialize_presentation(Presentation const& p);

  //! Word <-> string of letter names; used by the parser and by tests.
  word_type   word_from_string(Presentation const& p, std::string const& s);
  std::string word_to_string(Presentation const& p, word_type const& w);

}  // namespace congkit

#endif  // CONGKIT_PRESENTATION_HPP_

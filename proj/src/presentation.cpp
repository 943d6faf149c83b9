#include "congkit/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace congkit {

  namespace {
    // Letters usable in the text format. '1' is reserved for the empty word.
    std::string const kLetterPool
        = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ023456789";
  }  // namespace

  std::string Presentation::default_letter_names(uint32_t m) {
    if (m <= kLetterPool.size()) {
      return kLetterPool.substr(0, m);
    }
    return "";  // no printable names; text format unavailable
  }

  Presentation& Presentation::add_relation(word_type lhs, word_type rhs) {
    relations.emplace_back(std::move(lhs), std::move(rhs));
    return *this;
  }

  void Presentation::validate() const {
    for (auto const& [u, v] : relations) {
      for (auto const& w : {u, v}) {
        for (auto a : w) {
          if (a >= alphabet_size) {
            throw InputError("relation letter " + std::to_string(a)
                             + " out of range, alphabet has "
                             + std::to_string(alphabet_size) + " letters");
          }
        }
      }
    }
  }

  bool Presentation::has_empty_word_relation() const {
    if (kind != PresentationKind::semigroup) {
      return false;
    }
    return std::any_of(relations.begin(), relations.end(), [](auto const& r) {
      return r.first.empty() || r.second.empty();
    });
  }

  bool Presentation::operator==(Presentation const& that) const {
    return alphabet_size == that.alphabet_size && relations == that.relations
           && kind == that.kind && letters == that.letters;
  }

  Ordering shortlex_compare(word_type const& u, word_type const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size() ? Ordering::less : Ordering::greater;
    }
    if (u == v) {
      return Ordering::equal;
    }
    return u < v ? Ordering::less : Ordering::greater;
  }

  bool shortlex_less(word_type const& u, word_type const& v) {
    return shortlex_compare(u, v) == Ordering::less;
  }

  word_type reversed(word_type const& w) {
    return word_type(w.rbegin(), w.rend());
  }

  Presentation reverse(Presentation const& p) {
    Presentation q(p);
    for (auto& [u, v] : q.relations) {
      std::reverse(u.begin(), u.end());
      std::reverse(v.begin(), v.end());
    }
    return q;
  }

  size_t presentation_length(Presentation const& p) {
    size_t len = 0;
    for (auto const& [u, v] : p.relations) {
      len += u.size() + v.size();
    }
    return len;
  }

  word_type word_from_string(Presentation const& p, std::string const& s) {
    word_type w;
    if (s == "1") {
      return w;
    }
    for (char c : s) {
      auto pos = p.letters.find(c);
      if (pos == std::string::npos) {
        throw InputError(std::string("unknown letter '") + c + "'");
      }
      w.push_back(static_cast<letter_type>(pos));
    }
    return w;
  }

  std::string word_to_string(Presentation const& p, word_type const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto a : w) {
      if (a >= p.letters.size()) {
        throw InputError("letter without a printable name");
      }
      s += p.letters[a];
    }
    return s;
  }

  namespace {
    std::string strip(std::string s) {
      auto issp = [](unsigned char c) { return std::isspace(c); };
      while (!s.empty() && issp(s.back())) {
        s.pop_back();
      }
      size_t i = 0;
      while (i < s.size() && issp(s[i])) {
        ++i;
      }
      return s.substr(i);
    }
  }  // namespace

  Presentation parse_presentation(std::string const& text) {
    Presentation       p;
    bool               saw_alphabet = false;
    std::istringstream in(text);
    std::string        raw;
    size_t             lineno = 0;

    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      auto line = strip(raw);
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw ParseError("expected '<keyword>: ...'", lineno);
      }
      auto key   = strip(line.substr(0, colon));
      auto value = strip(line.substr(colon + 1));

      if (key == "alphabet") {
        if (saw_alphabet) {
          throw ParseError("duplicate alphabet declaration", lineno);
        }
        for (char c : value) {
          if (c == '1') {
            throw ParseError("'1' denotes the empty word, not a letter",
                             lineno);
          }
          if (std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError("whitespace inside alphabet", lineno);
          }
          if (p.letters.find(c) != std::string::npos) {
            throw ParseError(std::string("repeated letter '") + c + "'",
                             lineno);
          }
          p.letters += c;
        }
        p.alphabet_size = static_cast<uint32_t>(p.letters.size());
        saw_alphabet    = true;
      } else if (key == "kind") {
        if (value == "monoid") {
          p.kind = PresentationKind::monoid;
        } else if (value == "semigroup") {
          p.kind = PresentationKind::semigroup;
        } else {
          throw ParseError("kind must be monoid or semigroup", lineno);
        }
      } else if (key == "inverses") {
        if (!saw_alphabet) {
          throw ParseError("inverses before alphabet", lineno);
        }
        std::istringstream pairs(value);
        std::string        pr;
        while (pairs >> pr) {
          if (pr.size() != 2) {
            throw ParseError("inverse pairs are two letters, e.g. xX", lineno);
          }
          word_type x, y;
          try {
            x = word_from_string(p, pr.substr(0, 1));
            y = word_from_string(p, pr.substr(1, 1));
          } catch (InputError const& e) {
            throw ParseError(e.what(), lineno);
          }
          p.add_relation({x[0], y[0]}, {});
          p.add_relation({y[0], x[0]}, {});
        }
      } else if (key == "relation") {
        if (!saw_alphabet) {
          throw ParseError("relation before alphabet", lineno);
        }
        auto eq = value.find('=');
        if (eq == std::string::npos) {
          throw ParseError("relation needs '='", lineno);
        }
        auto lhs = strip(value.substr(0, eq));
        auto rhs = strip(value.substr(eq + 1));
        if (lhs.empty() || rhs.empty()) {
          throw ParseError("empty side in relation (use 1 for the empty word)",
                           lineno);
        }
        try {
          p.add_relation(word_from_string(p, lhs), word_from_string(p, rhs));
        } catch (InputError const& e) {
          throw ParseError(e.what(), lineno);
        }
      } else {
        throw ParseError("unknown keyword '" + key + "'", lineno);
      }
    }
    if (!saw_alphabet) {
      throw ParseError("missing alphabet declaration", lineno);
    }
    return p;
  }

  Presentation parse_presentation_file(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      throw InputError("cannot open presentation file: " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
  }

  std::string serialize_presentation(Presentation const& p) {
    if (p.letters.size() != p.alphabet_size) {
      throw InputError("presentation has no printable letter names");
    }
    std::string out = "alphabet: " + p.letters + "\n";
    if (p.kind == PresentationKind::semigroup) {
      out += "kind: semigroup\n";
    }
    for (auto const& [u, v] : p.relations) {
      out += "relation: " + word_to_string(p, u) + " = " + word_to_string(p, v)
             + "\n";
    }
    return out;
  }

}  // namespace congkit

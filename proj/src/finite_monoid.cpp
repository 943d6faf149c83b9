#include "congkit/finite_monoid.hpp"

#include <algorithm>
#include <unordered_map>

namespace congkit {

  uint32_t FiniteMonoid::evaluate(word_type const& w) const {
    uint32_t x = 0;
    for (auto a : w) {
      x = right(x, a);
    }
    return x;
  }

  uint32_t FiniteMonoid::product(uint32_t x, uint32_t y) const {
    for (auto a : words[y]) {
      x = right(x, a);
    }
    return x;
  }

  std::vector<Transformation> FiniteMonoid::regular_representation() const {
    std::vector<Transformation> out;
    out.reserve(size);
    for (uint32_t x = 0; x < size; ++x) {
      std::vector<uint32_t> img(size);
      for (uint32_t m = 0; m < size; ++m) {
        img[m] = product(m, x);
      }
      out.emplace_back(std::move(img));
    }
    return out;
  }

  std::vector<Transformation>
  FiniteMonoid::dual_regular_representation() const {
    std::vector<Transformation> out;
    out.reserve(size);
    for (uint32_t x = 0; x < size; ++x) {
      std::vector<uint32_t> img(size);
      for (uint32_t m = 0; m < size; ++m) {
        img[m] = product(x, m);
      }
      out.emplace_back(std::move(img));
    }
    return out;
  }

  namespace {

    // Breadth-first enumeration over (element, letter) with elements in
    // discovery order: candidate words arrive in short-lex order, so the
    // first word reaching an element is its minimal representative, and
    // every non-defining product contributes one rewriting rule.
    template <typename Element, typename Hash>
    FiniteMonoid enumerate(std::vector<Element> const& gens,
                           Element const& one, FroidurePinOptions opts) {
      FiniteMonoid M;
      M.num_letters = static_cast<uint32_t>(gens.size());
      M.presentation = Presentation(M.num_letters);

      std::vector<Element>                        elements;
      std::unordered_map<Element, uint32_t, Hash> index;
      auto intern = [&](Element const& x) -> std::pair<uint32_t, bool> {
        auto [it, inserted] = index.emplace(x, elements.size());
        if (inserted) {
          if (elements.size() >= opts.max_size) {
            throw BudgetError("froidure_pin size budget exceeded");
          }
          elements.push_back(x);
        }
        return {it->second, inserted};
      };

      intern(one);
      M.words.push_back({});
      for (uint32_t x = 0; x < elements.size(); ++x) {
        for (uint32_t a = 0; a < M.num_letters; ++a) {
          auto [q, fresh] = intern(elements[x] * gens[a]);
          M.right_cayley.push_back(q);
          word_type w = M.words[x];
          w.push_back(a);
          if (fresh) {
            M.words.push_back(std::move(w));
          } else {
            M.presentation.add_relation(std::move(w), M.words[q]);
          }
        }
      }
      M.size = static_cast<uint32_t>(elements.size());
      M.generators.resize(M.num_letters);
      for (uint32_t a = 0; a < M.num_letters; ++a) {
        M.generators[a] = index.at(gens[a]);
      }
      M.identity_adjoined = std::none_of(
          M.right_cayley.begin(), M.right_cayley.end(),
          [](uint32_t q) { return q == 0; });

      M.left_cayley.resize(size_t(M.size) * M.num_letters);
      for (uint32_t x = 0; x < M.size; ++x) {
        for (uint32_t a = 0; a < M.num_letters; ++a) {
          M.left_cayley[size_t(x) * M.num_letters + a]
              = index.at(gens[a] * elements[x]);
        }
      }

      if constexpr (std::is_same_v<Element, Transformation>) {
        M.transf_elements = std::move(elements);
      }
      return M;
    }

  }  // namespace

  FiniteMonoid froidure_pin(std::vector<Transformation> const& gens,
                            FroidurePinOptions opts) {
    if (gens.empty()) {
      throw InputError("no generators");
    }
    auto d = gens[0].degree();
    for (auto const& g : gens) {
      if (g.degree() != d) {
        throw InputError("generator degrees differ");
      }
    }
    return enumerate<Transformation, TransformationHash>(
        gens, Transformation::identity(d), opts);
  }

  FiniteMonoid froidure_pin(std::vector<FpMatrix> const& gens,
                            FroidurePinOptions opts) {
    if (gens.empty()) {
      throw InputError("no generators");
    }
    auto p = gens[0].characteristic();
    auto d = gens[0].dim();
    for (auto const& g : gens) {
      if (g.characteristic() != p || g.dim() != d) {
        throw InputError("generator shapes differ");
      }
    }
    return enumerate<FpMatrix, FpMatrixHash>(gens, FpMatrix::identity(p, d),
                                             opts);
  }

  FiniteMonoid from_table(std::vector<std::vector<uint32_t>> const& table,
                          std::vector<uint32_t> gens,
                          bool                  check_associativity) {
    auto n = static_cast<uint32_t>(table.size());
    if (n == 0) {
      throw InputError("empty multiplication table");
    }
    for (auto const& row : table) {
      if (row.size() != n) {
        throw InputError("multiplication table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw InputError("multiplication table entry out of range");
        }
      }
    }
    for (uint32_t x = 0; x < n; ++x) {
      if (table[0][x] != x || table[x][0] != x) {
        throw InputError("element 0 of the table is not an identity");
      }
    }
    if (check_associativity) {
      for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
          for (uint32_t z = 0; z < n; ++z) {
            if (table[table[x][y]][z] != table[x][table[y][z]]) {
              throw InputError("multiplication table is not associative");
            }
          }
        }
      }
    }

    auto closure = [&](std::vector<uint32_t> const& from) {
      std::vector<bool>     in(n, false);
      std::vector<uint32_t> reached = {0};
      in[0]                         = true;
      for (size_t i = 0; i < reached.size(); ++i) {
        for (auto g : from) {
          auto q = table[reached[i]][g];
          if (!in[q]) {
            in[q] = true;
            reached.push_back(q);
          }
        }
      }
      return in;
    };

    if (gens.empty()) {
      auto covered = closure(gens);
      for (uint32_t x = 0; x < n; ++x) {
        if (!covered[x]) {
          gens.push_back(x);
          covered = closure(gens);
        }
      }
    } else {
      for (auto g : gens) {
        if (g >= n) {
          throw InputError("generator index out of range");
        }
      }
      auto covered = closure(gens);
      if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw InputError("supplied generators do not generate the table");
      }
    }

    FiniteMonoid M;
    M.size         = n;
    M.num_letters  = static_cast<uint32_t>(gens.size());
    M.generators   = gens;
    M.presentation = Presentation(M.num_letters);
    M.right_cayley.resize(size_t(n) * M.num_letters);
    M.left_cayley.resize(size_t(n) * M.num_letters);
    for (uint32_t x = 0; x < n; ++x) {
      for (uint32_t a = 0; a < M.num_letters; ++a) {
        M.right_cayley[size_t(x) * M.num_letters + a] = table[x][gens[a]];
        M.left_cayley[size_t(x) * M.num_letters + a]  = table[gens[a]][x];
      }
    }

    // words and rules, scanning elements in discovery (short-lex) order
    M.words.assign(n, {});
    std::vector<bool>     have_word(n, false);
    std::vector<uint32_t> order = {0};
    have_word[0]                = true;
    for (size_t i = 0; i < order.size(); ++i) {
      auto x = order[i];
      for (uint32_t a = 0; a < M.num_letters; ++a) {
        auto      q = M.right(x, a);
        word_type w = M.words[x];
        w.push_back(a);
        if (!have_word[q]) {
          have_word[q] = true;
          M.words[q]   = std::move(w);
          order.push_back(q);
        } else {
          M.presentation.add_relation(std::move(w), M.words[q]);
        }
      }
    }
    M.identity_adjoined = std::none_of(
        M.right_cayley.begin(), M.right_cayley.end(),
        [](uint32_t q) { return q == 0; });
    return M;
  }

}  // namespace congkit

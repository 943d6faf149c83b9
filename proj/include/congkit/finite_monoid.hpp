//
// Concrete finite monoids enumerated from generators: elements indexed with
// the identity at 0, both Cayley graphs, short-lex minimal words, and the
// presentation whose relations are the rewriting rules discovered during
// enumeration.

#ifndef CONGKIT_FINITE_MONOID_HPP_
#define CONGKIT_FINITE_MONOID_HPP_

#include <optional>
#include <vector>

#include "fp_matrix.hpp"
#include "presentation.hpp"
#include "transf.hpp"
#include "types.hpp"

namespace congkit {

  struct FiniteMonoid {
    uint32_t               size        = 0;
    uint32_t               num_letters = 0;
    std::vector<uint32_t>  generators;    // letter -> element index
    std::vector<uint32_t>  right_cayley;  // x * num_letters + a -> x . gen_a
    std::vector<uint32_t>  left_cayley;   // x * num_letters + a -> gen_a . x
    std::vector<word_type> words;         // short-lex minimal representatives
    Presentation           presentation;  // rewriting rules found during
                                          // enumeration (the "non-human"
                                          // presentation)
    //! True if the identity is not a product of a nonempty generator word;
    //! for semigroup input this means an identity was adjoined.
    bool identity_adjoined = false;

    //! Natural transformation representation; empty unless built from
    //! transformations.
    std::vector<Transformation> transf_elements;

    uint32_t right(uint32_t x, letter_type a) const {
      return right_cayley[size_t(x) * num_letters + a];
    }
    uint32_t left(uint32_t x, letter_type a) const {
      return left_cayley[size_t(x) * num_letters + a];
    }

    //! theta: A* -> M evaluated from the identity.
    uint32_t evaluate(word_type const& w) const;

    //! x . y by tracing the word of y through the right Cayley graph.
    uint32_t product(uint32_t x, uint32_t y) const;

    //! The regular representation x -> (m -> m . x), degree = size.
    std::vector<Transformation> regular_representation() const;

    //! Dual regular representation x -> (m -> x . m), a faithful
    //! transformation representation of the dual monoid.
    std::vector<Transformation> dual_regular_representation() const;
  };

  struct FroidurePinOptions {
    //! Abort with BudgetError when more than this many elements appear.
    size_t max_size = 1u << 22;
  };

  FiniteMonoid froidure_pin(std::vector<Transformation> const& gens,
                            FroidurePinOptions opts = {});
  FiniteMonoid froidure_pin(std::vector<FpMatrix> const& gens,
                            FroidurePinOptions opts = {});

  //! Monoid given by an explicit multiplication table (row i, col j is the
  //! index of x_i . x_j); element 0 must be the identity. Element indices
  //! keep the table's numbering. Generator letters are taken from `gens`
  //! when nonempty, and otherwise chosen greedily so that they generate
  //! everything. Set check_associativity to validate the table (cubic).
  FiniteMonoid from_table(std::vector<std::vector<uint32_t>> const& table,
                          std::vector<uint32_t> gens = {},
                          bool check_associativity  = false);

}  // namespace congkit

#endif  // CONGKIT_FINITE_MONOID_HPP_

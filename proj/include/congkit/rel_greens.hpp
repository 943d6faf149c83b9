//
// Relative Green's relations of M x M modulo the diagonal submonoid
// Delta_M, used to shrink the set of pairs that generate all principal
// congruences. Two engines: a brute-force one (classes are strongly
// connected components of the action of Delta_M on pairs) and a
// group-theoretic one (orbits of image sets, stabiliser groups by a monoid
// analogue of Schreier's lemma, and membership tests in those groups).

#ifndef CONGKIT_REL_GREENS_HPP_
#define CONGKIT_REL_GREENS_HPP_

#include <cstdint>
#include <vector>

#include "finite_monoid.hpp"
#include "perm_group.hpp"
#include "transf.hpp"
#include "types.hpp"
#include "word_graph.hpp"

namespace congkit {

  struct RelClassIndex {
    uint32_t monoid_size = 0;
    //! One pair of element indices per class.
    std::vector<std::pair<uint32_t, uint32_t>> representatives;
    //! Left action of the diagonal submonoid on the representatives; its
    //! strongly connected components are the relative J-classes.
    WordGraph action_graph;
    //! pair (x, y) -> index into representatives, indexed x * size + y.
    //! Filled by the SCC engine; the group engine fills it only when the
    //! pair count is small enough to matter for cross-checking.
    std::vector<uint32_t> class_of;

    uint32_t classify(uint32_t x, uint32_t y) const {
      return class_of.at(size_t(x) * monoid_size + y);
    }
  };

  inline constexpr size_t kDefaultPairBudget = 16'000'000;

  //! Relative R-classes of M x M modulo the diagonal as strongly connected
  //! components of the right diagonal action; the oracle engine.
  RelClassIndex relative_r_class_reps_scc(FiniteMonoid const& M,
                                          size_t pair_budget
                                          = kDefaultPairBudget);

  //! Same classes via image-set orbits, Schreier generators and stabiliser
  //! chains; representatives may differ from the SCC engine's.
  RelClassIndex relative_r_class_reps_group(FiniteMonoid const& M);

  //! Relative L-classes, computed on the dual monoid (from the left Cayley
  //! graph) with the chosen engine.
  RelClassIndex relative_l_class_reps_scc(FiniteMonoid const& M,
                                          size_t pair_budget
                                          = kDefaultPairBudget);
  RelClassIndex relative_l_class_reps_group(FiniteMonoid const& M);

  //! One representative pair per strongly connected component of the left
  //! action on the R-class representatives.
  std::vector<std::pair<uint32_t, uint32_t>>
  relative_j_class_reps(RelClassIndex const& idx);

  //! Pairs whose principal congruences cover all principal congruences of
  //! the given side: relative R- (right), L- (left) or J- (two-sided) class
  //! representatives, with diagonal pairs dropped.
  std::vector<std::pair<uint32_t, uint32_t>>
  reduced_generating_pairs(FiniteMonoid const& M, Side side,
                           bool group_engine = false);

  //! The dual monoid: same elements, reversed multiplication, Cayley
  //! graphs swapped, with the faithful transformation representation read
  //! off the left Cayley graph.
  FiniteMonoid dual_monoid(FiniteMonoid const& M);

  //! Stabiliser group of Y_0 from an orbit traversal: generators are the
  //! restrictions to Y_0 of u_i a ubar_j over edges Y_i . a = Y_j of the
  //! orbit. Points of Y_0 are positions in its sorted point list. Throws
  //! InputError unless (u_i ubar_i) restricted to Y_0 is the identity for
  //! every i.
  PermutationGroup
  schreier_generators(std::vector<std::vector<uint32_t>> const& orbit,
                      std::vector<Transformation> const&        u,
                      std::vector<Transformation> const&        ubar,
                      std::vector<Transformation> const&        gens);

}  // namespace congkit

#endif  // CONGKIT_REL_GREENS_HPP_

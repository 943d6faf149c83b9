//
// Permutation groups on {0, ..., degree - 1} with a deterministic
// stabiliser chain for membership testing and order computation, plus an
// exhaustive closure that serves as its own oracle for small groups.

#ifndef CONGKIT_PERM_GROUP_HPP_
#define CONGKIT_PERM_GROUP_HPP_

#include <vector>

#include "transf.hpp"
#include "types.hpp"

namespace congkit {

  //! A bijective transformation.
  using Permutation = Transformation;

  bool        is_permutation(Transformation const& f);
  Permutation inverse(Permutation const& p);

  class PermutationGroup {
   public:
    //! Generators may include duplicates and identities; degree is taken
    //! from the generators (identity group when empty, degree 1).
    explicit PermutationGroup(std::vector<Permutation> generators);

    uint32_t degree() const {
      return _degree;
    }

    std::vector<Permutation> const& generators() const {
      return _gens;
    }

    bool contains(Permutation const& p) const;

    uint64_t order() const;

    //! All elements by breadth-first closure; throws BudgetError beyond
    //! `limit`. Used as an oracle for the stabiliser chain.
    std::vector<Permutation> elements_by_closure(size_t limit = 10000) const;

   private:
    struct Level {
      uint32_t                 base;
      std::vector<Permutation> gens;
      //! orbit[pt] = index + 1 into transversal, 0 if not in orbit
      std::vector<uint32_t>    orbit_pos;
      std::vector<uint32_t>    orbit;
      std::vector<Permutation> transversal;  // maps base to orbit point
    };

    void     extend_orbit(size_t level);
    void     schreier_sims(size_t level);
    bool     sift(size_t level, Permutation p) const;

    uint32_t           _degree;
    std::vector<Permutation> _gens;
    std::vector<Level> _chain;
  };

}  // namespace congkit

#endif  // CONGKIT_PERM_GROUP_HPP_

//
// Congruences of a concrete finite monoid: principal congruences by
// pair-orbit closure over the Cayley graphs, joins of partitions, and the
// principal-congruences-plus-joins lattice pipeline.

#ifndef CONGKIT_CONGRUENCE_HPP_
#define CONGKIT_CONGRUENCE_HPP_

#include <string>
#include <vector>

#include "finite_monoid.hpp"
#include "lattice_ops.hpp"
#include "types.hpp"

namespace congkit {

  //! A congruence of a finite monoid as a canonical partition: each element
  //! index maps to the least index in its class.
  struct CongruencePartition {
    std::vector<uint32_t> class_of;

    static CongruencePartition trivial(uint32_t n);
    static CongruencePartition universal(uint32_t n);

    size_t size() const {
      return class_of.size();
    }
    size_t number_of_classes() const;

    //! Bytes of class_of; canonical, usable as a hash/sort key.
    std::string key() const;

    bool operator==(CongruencePartition const&) const = default;
  };

  //! Least partition containing (x, y) that is compatible on the given
  //! side(s): worklist closure multiplying pairs by generators through the
  //! Cayley graphs, merging with union-find.
  CongruencePartition principal_congruence(FiniteMonoid const& M, uint32_t x,
                                           uint32_t y, Side side);

  //! Distinct principal congruences generated by the given pairs (default:
  //! all unordered pairs), in first-seen order.
  std::vector<CongruencePartition> distinct_principal_congruences(
      FiniteMonoid const& M, Side side,
      std::vector<std::pair<uint32_t, uint32_t>> const* pairs = nullptr);

  //! Least upper bound: union-find merge of both partitions.
  CongruencePartition join_partitions(CongruencePartition const& p,
                                      CongruencePartition const& q);

  //! p <= q as congruences (every p-class lies inside a q-class).
  bool partition_leq(CongruencePartition const& p,
                     CongruencePartition const& q);

  //! True iff x ~ y implies xa ~ ya (right), ax ~ ay (left), or both, for
  //! all generators; a test hook.
  bool is_compatible_partition(FiniteMonoid const& M,
                               CongruencePartition const& p, Side side);

  //! The full congruence lattice: principal congruences (from all pairs, or
  //! from relative Green's class representatives when reduce_greens is set)
  //! closed under joins, plus the trivial congruence. The result does not
  //! depend on reduce_greens.
  CongruenceLattice<CongruencePartition>
  congruence_lattice(FiniteMonoid const& M, Side side,
                     bool reduce_greens = false);

  //! Oracle: the number of partitions of M compatible on the given side,
  //! by exhaustive enumeration of all set partitions. Feasible for tiny M.
  uint64_t brute_force_congruence_count(FiniteMonoid const& M, Side side);

}  // namespace congkit

#endif  // CONGKIT_CONGRUENCE_HPP_

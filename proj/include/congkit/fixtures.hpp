//
// Readers for the fixture file formats: transformation generators (one
// image vector per line), matrix generators (`p d` header then d x d rows
// per matrix), multiplication tables (`n` then n rows), and word pair
// files (`u = v` per line). '#' comments and blank lines are allowed
// everywhere.

#ifndef CONGKIT_FIXTURES_HPP_
#define CONGKIT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "fp_matrix.hpp"
#include "presentation.hpp"
#include "transf.hpp"
#include "types.hpp"

namespace congkit {

  std::vector<Transformation> read_transformations(std::string const& path);
  std::vector<FpMatrix>       read_matrices(std::string const& path);
  std::vector<std::vector<uint32_t>> read_table(std::string const& path);
  std::vector<std::pair<word_type, word_type>>
  read_pairs(std::string const& path, Presentation const& p);

  // Generator families used by the test and benchmark fixtures.

  //! Catalan monoid: order-preserving and order-decreasing transformations
  //! of an n-chain; generated by the maps sending i+1 to i.
  std::vector<Transformation> catalan_generators(uint32_t n);

  //! O_n, all order-preserving transformations of an n-chain.
  std::vector<Transformation> order_preserving_generators(uint32_t n);

  //! Full transformation monoid T_n.
  std::vector<Transformation> full_transformation_generators(uint32_t n);

  //! Symmetric group S_n as transformations.
  std::vector<Transformation> symmetric_group_generators(uint32_t n);

  //! Symmetric inverse monoid I_n as transformations on n + 1 points, the
  //! extra point acting as the absorbing "undefined" value.
  std::vector<Transformation> symmetric_inverse_generators(uint32_t n);

  //! Partial transformation monoid PT_n, same convention as I_n.
  std::vector<Transformation> partial_transformation_generators(uint32_t n);

  //! The full matrix monoid of 3x3 matrices over F_2 (512 elements).
  std::vector<FpMatrix> gl3_f2_generators();

  //! 2x2 matrices over F_7 with determinant 0 or 1 (721 elements).
  std::vector<FpMatrix> f7_det01_generators();

}  // namespace congkit

#endif  // CONGKIT_FIXTURES_HPP_

//
// Square matrices over a prime field F_p for small p.

#ifndef CONGKIT_FP_MATRIX_HPP_
#define CONGKIT_FP_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace congkit {

  class FpMatrix {
   public:
    FpMatrix() = default;
    FpMatrix(uint32_t p, uint32_t dim, std::vector<uint32_t> entries);

    static FpMatrix identity(uint32_t p, uint32_t dim);

    uint32_t characteristic() const {
      return _p;
    }
    uint32_t dim() const {
      return _dim;
    }
    uint32_t at(uint32_t row, uint32_t col) const {
      return _entries[row * _dim + col];
    }
    std::vector<uint32_t> const& entries() const {
      return _entries;
    }

    FpMatrix operator*(FpMatrix const& that) const;

    uint32_t determinant() const;
    uint32_t rank() const;

    bool operator==(FpMatrix const&) const  = default;
    auto operator<=>(FpMatrix const&) const = default;

   private:
    uint32_t              _p   = 0;
    uint32_t              _dim = 0;
    std::vector<uint32_t> _entries;
  };

  struct FpMatrixHash {
    size_t operator()(FpMatrix const& m) const;
  };

  //! All p^(d*d) matrices, in lexicographic entry order.
  std::vector<FpMatrix> all_matrices(uint32_t p, uint32_t dim);

}  // namespace congkit

#endif  // CONGKIT_FP_MATRIX_HPP_

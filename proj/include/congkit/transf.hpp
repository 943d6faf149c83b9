//
// Transformations of {0, ..., degree - 1}, stored as image vectors and
// composed left to right: (x)(fg) = ((x)f)g.

#ifndef CONGKIT_TRANSF_HPP_
#define CONGKIT_TRANSF_HPP_

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace congkit {

  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<uint32_t> images);

    static Transformation identity(uint32_t degree);

    uint32_t degree() const {
      return static_cast<uint32_t>(_images.size());
    }

    uint32_t operator[](uint32_t pt) const {
      return _images[pt];
    }

    std::vector<uint32_t> const& images() const {
      return _images;
    }

    //! this followed by that.
    Transformation operator*(Transformation const& that) const;

    //! Sorted distinct image points.
    std::vector<uint32_t> image_set() const;

    //! Kernel as a normal form: each point mapped to the least point with
    //! the same image.
    std::vector<uint32_t> kernel() const;

    //! Some f' with this * f' * this == this.
    Transformation pseudo_inverse() const;

    Transformation pow(uint64_t e) const;

    bool operator==(Transformation const&) const  = default;
    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<uint32_t> _images;
  };

  struct TransformationHash {
    size_t operator()(Transformation const& f) const;
  };

}  // namespace congkit

#endif  // CONGKIT_TRANSF_HPP_

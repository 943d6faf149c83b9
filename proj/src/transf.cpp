#include "congkit/transf.hpp"

#include <algorithm>
#include <numeric>

namespace congkit {

  Transformation::Transformation(std::vector<uint32_t> images)
      : _images(std::move(images)) {
    for (auto x : _images) {
      if (x >= _images.size()) {
        throw InputError("transformation image point out of range");
      }
    }
  }

  Transformation Transformation::identity(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    Transformation f;
    f._images = std::move(img);
    return f;
  }

  Transformation Transformation::operator*(Transformation const& that) const {
    Transformation out;
    out._images.resize(_images.size());
    for (size_t x = 0; x < _images.size(); ++x) {
      out._images[x] = that._images[_images[x]];
    }
    return out;
  }

  std::vector<uint32_t> Transformation::image_set() const {
    auto im = _images;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::vector<uint32_t> Transformation::kernel() const {
    std::vector<uint32_t> least(_images.size(), UNDEFINED);
    std::vector<uint32_t> out(_images.size());
    for (uint32_t x = 0; x < _images.size(); ++x) {
      auto& rep = least[_images[x]];
      if (rep == UNDEFINED) {
        rep = x;
      }
      out[x] = rep;
    }
    return out;
  }

  Transformation Transformation::pseudo_inverse() const {
    std::vector<uint32_t> inv(_images.size(), UNDEFINED);
    for (uint32_t x = 0; x < _images.size(); ++x) {
      if (inv[_images[x]] == UNDEFINED) {
        inv[_images[x]] = x;
      }
    }
    // off the image any value works; pick a fixed image point
    uint32_t fallback = inv[_images[0]];
    for (auto& x : inv) {
      if (x == UNDEFINED) {
        x = fallback;
      }
    }
    Transformation out;
    out._images = std::move(inv);
    return out;
  }

  Transformation Transformation::pow(uint64_t e) const {
    auto result = identity(degree());
    auto base   = *this;
    while (e > 0) {
      if (e & 1) {
        result = result * base;
      }
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  size_t TransformationHash::operator()(Transformation const& f) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (auto x : f.images()) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

}  // namespace congkit

#include "congkit/fp_matrix.hpp"

namespace congkit {

  namespace {
    bool is_prime(uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  FpMatrix::FpMatrix(uint32_t p, uint32_t dim, std::vector<uint32_t> entries)
      : _p(p), _dim(dim), _entries(std::move(entries)) {
    if (!is_prime(p) || p > 13) {
      throw InputError("matrix characteristic must be a prime at most 13");
    }
    if (_entries.size() != size_t(dim) * dim) {
      throw InputError("matrix entry count does not match dimension");
    }
    for (auto& e : _entries) {
      e %= p;
    }
  }

  FpMatrix FpMatrix::identity(uint32_t p, uint32_t dim) {
    std::vector<uint32_t> entries(size_t(dim) * dim, 0);
    for (uint32_t i = 0; i < dim; ++i) {
      entries[i * dim + i] = 1;
    }
    return FpMatrix(p, dim, std::move(entries));
  }

  FpMatrix FpMatrix::operator*(FpMatrix const& that) const {
    if (_p != that._p || _dim != that._dim) {
      throw InputError("matrix shapes or characteristics differ");
    }
    std::vector<uint32_t> out(size_t(_dim) * _dim, 0);
    for (uint32_t i = 0; i < _dim; ++i) {
      for (uint32_t k = 0; k < _dim; ++k) {
        auto a = at(i, k);
        if (a == 0) {
          continue;
        }
        for (uint32_t j = 0; j < _dim; ++j) {
          out[i * _dim + j] = (out[i * _dim + j] + a * that.at(k, j)) % _p;
        }
      }
    }
    return FpMatrix(_p, _dim, std::move(out));
  }

  uint32_t FpMatrix::determinant() const {
    // Gaussian elimination over F_p
    auto     a   = _entries;
    uint64_t det = 1;
    for (uint32_t col = 0; col < _dim; ++col) {
      uint32_t pivot = UNDEFINED;
      for (uint32_t row = col; row < _dim; ++row) {
        if (a[row * _dim + col] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot == UNDEFINED) {
        return 0;
      }
      if (pivot != col) {
        for (uint32_t j = 0; j < _dim; ++j) {
          std::swap(a[pivot * _dim + j], a[col * _dim + j]);
        }
        det = (det * (_p - 1)) % _p;
      }
      auto inv = [&](uint32_t x) {
        for (uint32_t y = 1; y < _p; ++y) {
          if (x * y % _p == 1) {
            return y;
          }
        }
        return 0u;
      };
      auto piv = a[col * _dim + col];
      det      = det * piv % _p;
      auto pinv = inv(piv);
      for (uint32_t row = col + 1; row < _dim; ++row) {
        auto factor = a[row * _dim + col] * pinv % _p;
        if (factor == 0) {
          continue;
        }
        for (uint32_t j = col; j < _dim; ++j) {
          a[row * _dim + j]
              = (a[row * _dim + j] + (_p - factor) * a[col * _dim + j]) % _p;
        }
      }
    }
    return static_cast<uint32_t>(det);
  }

  uint32_t FpMatrix::rank() const {
    auto     a    = _entries;
    uint32_t rank = 0;
    for (uint32_t col = 0; col < _dim && rank < _dim; ++col) {
      uint32_t pivot = UNDEFINED;
      for (uint32_t row = rank; row < _dim; ++row) {
        if (a[row * _dim + col] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot == UNDEFINED) {
        continue;
      }
      for (uint32_t j = 0; j < _dim; ++j) {
        std::swap(a[pivot * _dim + j], a[rank * _dim + j]);
      }
      auto piv = a[rank * _dim + col];
      uint32_t pinv = 0;
      for (uint32_t y = 1; y < _p; ++y) {
        if (piv * y % _p == 1) {
          pinv = y;
        }
      }
      for (uint32_t row = 0; row < _dim; ++row) {
        if (row == rank) {
          continue;
        }
        auto factor = a[row * _dim + col] * pinv % _p;
        if (factor == 0) {
          continue;
        }
        for (uint32_t j = 0; j < _dim; ++j) {
          a[row * _dim + j]
              = (a[row * _dim + j] + (_p - factor) * a[rank * _dim + j]) % _p;
        }
      }
      ++rank;
    }
    return rank;
  }

  size_t FpMatrixHash::operator()(FpMatrix const& m) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (auto x : m.entries()) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::vector<FpMatrix> all_matrices(uint32_t p, uint32_t dim) {
    size_t cells = size_t(dim) * dim;
    size_t total = 1;
    for (size_t i = 0; i < cells; ++i) {
      total *= p;
    }
    std::vector<FpMatrix>  out;
    std::vector<uint32_t> entries(cells, 0);
    for (size_t idx = 0; idx < total; ++idx) {
      auto rem = idx;
      for (size_t i = cells; i-- > 0;) {
        entries[i] = rem % p;
        rem /= p;
      }
      out.emplace_back(p, dim, entries);
    }
    return out;
  }

}  // namespace congkit

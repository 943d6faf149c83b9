#include "congkit/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace congkit {

  bool is_permutation(Transformation const& f) {
    std::vector<bool> hit(f.degree(), false);
    for (uint32_t x = 0; x < f.degree(); ++x) {
      if (hit[f[x]]) {
        return false;
      }
      hit[f[x]] = true;
    }
    return true;
  }

  Permutation inverse(Permutation const& p) {
    std::vector<uint32_t> img(p.degree());
    for (uint32_t x = 0; x < p.degree(); ++x) {
      img[p[x]] = x;
    }
    return Permutation(std::move(img));
  }

  PermutationGroup::PermutationGroup(std::vector<Permutation> generators) {
    _degree = generators.empty() ? 1 : generators[0].degree();
    auto id = Permutation::identity(_degree);
    for (auto& g : generators) {
      if (g.degree() != _degree) {
        throw InputError("generator degrees differ");
      }
      if (!is_permutation(g)) {
        throw InputError("generator is not a permutation");
      }
      if (!(g == id)) {
        _gens.push_back(std::move(g));
      }
    }
    if (!_gens.empty()) {
      // base point: least point moved by some generator
      uint32_t base = UNDEFINED;
      for (uint32_t x = 0; x < _degree && base == UNDEFINED; ++x) {
        for (auto const& g : _gens) {
          if (g[x] != x) {
            base = x;
            break;
          }
        }
      }
      Level level;
      level.base = base;
      level.gens = _gens;
      _chain.push_back(std::move(level));
      extend_orbit(0);
      schreier_sims(0);
    }
  }

  void PermutationGroup::extend_orbit(size_t li) {
    auto& level = _chain[li];
    if (level.orbit.empty()) {
      level.orbit_pos.assign(_degree, 0);
      level.orbit.push_back(level.base);
      level.orbit_pos[level.base] = 1;
      level.transversal.push_back(Permutation::identity(_degree));
    }
    for (size_t i = 0; i < level.orbit.size(); ++i) {
      auto pt = level.orbit[i];
      for (auto const& g : level.gens) {
        auto q = g[pt];
        if (level.orbit_pos[q] == 0) {
          level.orbit_pos[q] = static_cast<uint32_t>(level.orbit.size()) + 1;
          level.orbit.push_back(q);
          level.transversal.push_back(level.transversal[i] * g);
        }
      }
    }
  }

  bool PermutationGroup::sift(size_t li, Permutation p) const {
    auto id = Permutation::identity(_degree);
    for (size_t i = li; i < _chain.size(); ++i) {
      auto const& level = _chain[i];
      auto        q     = p[level.base];
      if (level.orbit_pos[q] == 0) {
        return false;
      }
      p = p * inverse(level.transversal[level.orbit_pos[q] - 1]);
    }
    return p == id;
  }

  void PermutationGroup::schreier_sims(size_t li) {
    auto const id = Permutation::identity(_degree);
    // Once a Schreier generator sifts to the identity it stays sifted as
    // the lower chain only grows, so a single pass over (orbit point,
    // generator) pairs suffices. _chain may reallocate; index it afresh.
    for (size_t i = 0; i < _chain[li].orbit.size(); ++i) {
      for (size_t gi = 0; gi < _chain[li].gens.size(); ++gi) {
        auto const& level = _chain[li];
        auto        pt    = level.orbit[i];
        auto const& g     = level.gens[gi];
        auto        s     = level.transversal[i] * g
                 * inverse(level.transversal[level.orbit_pos[g[pt]] - 1]);
        if (s == id || sift(li + 1, s)) {
          continue;
        }
        if (li + 1 == _chain.size()) {
          uint32_t base = UNDEFINED;
          for (uint32_t x = 0; x < _degree; ++x) {
            if (s[x] != x) {
              base = x;
              break;
            }
          }
          Level fresh;
          fresh.base = base;
          _chain.push_back(std::move(fresh));
        }
        _chain[li + 1].gens.push_back(std::move(s));
        extend_orbit(li + 1);
        schreier_sims(li + 1);
      }
    }
  }

  bool PermutationGroup::contains(Permutation const& p) const {
    if (p.degree() != _degree) {
      throw InputError("degree mismatch");
    }
    if (!is_permutation(p)) {
      return false;
    }
    if (_chain.empty()) {
      return p == Permutation::identity(_degree);
    }
    return sift(0, p);
  }

  uint64_t PermutationGroup::order() const {
    uint64_t n = 1;
    for (auto const& level : _chain) {
      n *= level.orbit.size();
    }
    return n;
  }

  std::vector<Permutation>
  PermutationGroup::elements_by_closure(size_t limit) const {
    std::vector<Permutation> elements = {Permutation::identity(_degree)};
    std::unordered_set<Permutation, TransformationHash> seen(elements.begin(),
                                                             elements.end());
    for (size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : _gens) {
        auto q = elements[i] * g;
        if (seen.insert(q).second) {
          if (elements.size() >= limit) {
            throw BudgetError("closure limit exceeded");
          }
          elements.push_back(std::move(q));
        }
      }
    }
    return elements;
  }

}  // namespace congkit

#include "congkit/rel_greens.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "congkit/congruence.hpp"

namespace congkit {

  namespace {

    // Iterative Tarjan over an implicit graph; returns (component id per
    // node, component count). Components are numbered in the order they
    // complete (reverse topological).
    template <typename Succ>
    std::pair<std::vector<uint32_t>, uint32_t>
    strongly_connected_components(size_t n, uint32_t out_degree,
                                  Succ&& succ) {
      std::vector<uint32_t> index(n, UNDEFINED), low(n), comp(n, UNDEFINED);
      std::vector<bool>     on_stack(n, false);
      std::vector<uint32_t> stack;
      struct Frame {
        uint32_t node;
        uint32_t next_edge;
      };
      std::vector<Frame> frames;
      uint32_t           next_index = 0, components = 0;

      for (size_t root = 0; root < n; ++root) {
        if (index[root] != UNDEFINED) {
          continue;
        }
        frames.push_back({static_cast<uint32_t>(root), 0});
        index[root] = low[root] = next_index++;
        stack.push_back(static_cast<uint32_t>(root));
        on_stack[root] = true;
        while (!frames.empty()) {
          auto& fr = frames.back();
          if (fr.next_edge < out_degree) {
            auto k = fr.next_edge++;
            auto w = succ(fr.node, k);
            if (index[w] == UNDEFINED) {
              index[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = true;
              frames.push_back({w, 0});
            } else if (on_stack[w]) {
              low[fr.node] = std::min(low[fr.node], index[w]);
            }
          } else {
            auto v = fr.node;
            if (low[v] == index[v]) {
              uint32_t w;
              do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w]     = components;
              } while (w != v);
              ++components;
            }
            frames.pop_back();
            if (!frames.empty()) {
              low[frames.back().node] = std::min(low[frames.back().node],
                                                 low[v]);
            }
          }
        }
      }
      return {std::move(comp), components};
    }

    RelClassIndex scc_index(FiniteMonoid const& M, bool right_edges,
                            size_t pair_budget) {
      size_t const n = M.size, total = n * n;
      if (total > pair_budget) {
        throw BudgetError("pair count " + std::to_string(total)
                          + " exceeds the budget");
      }
      auto succ = [&](uint32_t v, uint32_t a) -> uint32_t {
        uint32_t x = v / n, y = v % n;
        if (right_edges) {
          return M.right(x, a) * n + M.right(y, a);
        }
        return M.left(x, a) * n + M.left(y, a);
      };
      auto [comp, count]
          = strongly_connected_components(total, M.num_letters, succ);

      // one representative per component: the least pair index
      std::vector<uint32_t> least(count, UNDEFINED);
      for (uint32_t v = 0; v < total; ++v) {
        if (least[comp[v]] == UNDEFINED) {
          least[comp[v]] = v;  // v ascending, so first hit is least
        }
      }
      // number representatives by their pair index for a stable order
      std::vector<uint32_t> order(count);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](uint32_t a, uint32_t b) { return least[a] < least[b]; });
      std::vector<uint32_t> rep_id(count);
      RelClassIndex         idx;
      idx.monoid_size = M.size;
      idx.representatives.resize(count);
      for (uint32_t i = 0; i < count; ++i) {
        rep_id[order[i]] = i;
        auto v           = least[order[i]];
        idx.representatives[i]
            = {static_cast<uint32_t>(v / n), static_cast<uint32_t>(v % n)};
      }
      idx.class_of.resize(total);
      for (uint32_t v = 0; v < total; ++v) {
        idx.class_of[v] = rep_id[comp[v]];
      }

      // word graph of the action of the diagonal on representatives on the
      // side opposite to the defining edges
      idx.action_graph = WordGraph(M.num_letters, count);
      for (uint32_t i = 0; i < count; ++i) {
        auto [x, y] = idx.representatives[i];
        for (letter_type a = 0; a < M.num_letters; ++a) {
          uint32_t tx = right_edges ? M.left(x, a) : M.right(x, a);
          uint32_t ty = right_edges ? M.left(y, a) : M.right(y, a);
          idx.action_graph.add_edge(i, a, idx.class_of[size_t(tx) * n + ty]);
        }
      }
      return idx;
    }

  }  // namespace

  RelClassIndex relative_r_class_reps_scc(FiniteMonoid const& M,
                                          size_t pair_budget) {
    return scc_index(M, true, pair_budget);
  }

  RelClassIndex relative_l_class_reps_scc(FiniteMonoid const& M,
                                          size_t pair_budget) {
    return scc_index(M, false, pair_budget);
  }

  FiniteMonoid dual_monoid(FiniteMonoid const& M) {
    FiniteMonoid D;
    D.size         = M.size;
    D.num_letters  = M.num_letters;
    D.generators   = M.generators;
    D.right_cayley = M.left_cayley;
    D.left_cayley  = M.right_cayley;
    D.presentation = reverse(M.presentation);
    D.identity_adjoined = M.identity_adjoined;
    // minimal words for the reversed multiplication
    D.words.assign(D.size, {});
    std::vector<bool>     have(D.size, false);
    std::vector<uint32_t> order = {0};
    have[0]                     = true;
    for (size_t i = 0; i < order.size(); ++i) {
      auto x = order[i];
      for (letter_type a = 0; a < D.num_letters; ++a) {
        auto q = D.right(x, a);
        if (!have[q]) {
          have[q]    = true;
          D.words[q] = D.words[x];
          D.words[q].push_back(a);
          order.push_back(q);
        }
      }
    }
    D.transf_elements = M.dual_regular_representation();
    return D;
  }

  std::vector<std::pair<uint32_t, uint32_t>>
  relative_j_class_reps(RelClassIndex const& idx) {
    auto const& graph = idx.action_graph;
    auto [comp, count] = strongly_connected_components(
        graph.number_of_nodes(), graph.alphabet_size(),
        [&](uint32_t v, uint32_t a) { return graph.target(v, a); });
    std::vector<uint32_t> least(count, UNDEFINED);
    for (uint32_t v = 0; v < graph.number_of_nodes(); ++v) {
      if (least[comp[v]] == UNDEFINED) {
        least[comp[v]] = v;
      }
    }
    std::sort(least.begin(), least.end());
    std::vector<std::pair<uint32_t, uint32_t>> reps;
    reps.reserve(count);
    for (auto v : least) {
      reps.push_back(idx.representatives[v]);
    }
    return reps;
  }

  // ---------------------------------------------------------------------
  // Group-theoretic engine
  // ---------------------------------------------------------------------

  namespace {

    std::string points_key(std::vector<uint32_t> const& pts) {
      return std::string(reinterpret_cast<char const*>(pts.data()),
                         pts.size() * sizeof(uint32_t));
    }

    std::vector<uint32_t> apply_to_set(std::vector<uint32_t> const& pts,
                                       Transformation const&        f) {
      std::vector<uint32_t> out;
      out.reserve(pts.size());
      for (auto p : pts) {
        out.push_back(f[p]);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    // the pair (x, y) as a point map on 2d points
    inline uint32_t pair_apply(Transformation const& x,
                               Transformation const& y, uint32_t d,
                               uint32_t p) {
      return p < d ? x[p] : y[p - d] + d;
    }

    uint64_t permutation_order(std::vector<uint32_t> const& perm) {
      std::vector<bool> seen(perm.size(), false);
      uint64_t          ord = 1;
      for (uint32_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) {
          continue;
        }
        uint64_t len = 0;
        for (uint32_t p = s; !seen[p]; p = perm[p]) {
          seen[p] = true;
          ++len;
        }
        ord = std::lcm(ord, len);
      }
      return ord;
    }

    struct GroupEngine {
      explicit GroupEngine(FiniteMonoid const& M) : monoid(M) {
        transfs = M.transf_elements.empty() ? M.regular_representation()
                                            : M.transf_elements;
        d = transfs[0].degree();
        for (auto g : M.generators) {
          gen_t.push_back(transfs[g]);
        }
        elem_index.reserve(transfs.size());
        for (uint32_t i = 0; i < transfs.size(); ++i) {
          elem_index.emplace(transfs[i], i);
        }
        build_image_orbit();
        build_sccs();
      }

      FiniteMonoid const&          monoid;
      uint32_t                     d;
      std::vector<Transformation>  transfs;
      std::vector<Transformation>  gen_t;
      std::unordered_map<Transformation, uint32_t, TransformationHash>
          elem_index;

      // single-image orbit {im(x) : x in M}
      std::vector<std::vector<uint32_t>>        images;
      std::unordered_map<std::string, uint32_t> image_index;
      std::vector<std::vector<uint32_t>>        img_act;
      std::vector<Transformation>               witness;
      uint32_t                                  K = 0;

      // pair-image sccs; a pair image is p = i * K + j
      std::vector<uint32_t> scc_id;
      uint32_t              scc_count = 0;
      std::vector<uint32_t> scc_root;
      std::vector<Transformation> u_elt, ubar_elt;  // per pair image
      std::vector<PermutationGroup>      groups;    // per scc
      std::vector<std::vector<uint32_t>> root_points;   // per scc
      std::vector<std::vector<uint32_t>> pos_of_point;  // per scc, size 2d

      void build_image_orbit() {
        std::vector<uint32_t> full(d);
        std::iota(full.begin(), full.end(), 0);
        images.push_back(full);
        image_index.emplace(points_key(full), 0);
        witness.push_back(Transformation::identity(d));
        for (uint32_t i = 0; i < images.size(); ++i) {
          img_act.emplace_back(gen_t.size());
          for (uint32_t a = 0; a < gen_t.size(); ++a) {
            auto next       = apply_to_set(images[i], gen_t[a]);
            auto [it, isnew] = image_index.emplace(
                points_key(next), static_cast<uint32_t>(images.size()));
            if (isnew) {
              images.push_back(std::move(next));
              witness.push_back(witness[i] * gen_t[a]);
            }
            img_act[i][a] = it->second;
          }
        }
        K = static_cast<uint32_t>(images.size());
      }

      std::vector<uint32_t> pair_points(uint32_t p) const {
        auto const& first  = images[p / K];
        auto const& second = images[p % K];
        std::vector<uint32_t> pts;
        pts.reserve(first.size() + second.size());
        pts.insert(pts.end(), first.begin(), first.end());
        for (auto q : second) {
          pts.push_back(q + d);
        }
        return pts;
      }

      void build_sccs() {
        auto succ = [&](uint32_t p, uint32_t a) -> uint32_t {
          return img_act[p / K][a] * K + img_act[p % K][a];
        };
        auto [comp, count] = strongly_connected_components(
            size_t(K) * K, static_cast<uint32_t>(gen_t.size()), succ);
        scc_id    = std::move(comp);
        scc_count = count;
        scc_root.assign(count, UNDEFINED);
        for (uint32_t p = 0; p < size_t(K) * K; ++p) {
          if (scc_root[scc_id[p]] == UNDEFINED) {
            scc_root[scc_id[p]] = p;
          }
        }

        u_elt.assign(size_t(K) * K, {});
        ubar_elt.assign(size_t(K) * K, {});
        groups.reserve(count);
        root_points.resize(count);
        pos_of_point.resize(count);

        for (uint32_t c = 0; c < count; ++c) {
          auto root      = scc_root[c];
          root_points[c] = pair_points(root);
          auto& pos      = pos_of_point[c];
          pos.assign(2 * size_t(d), UNDEFINED);
          for (uint32_t i = 0; i < root_points[c].size(); ++i) {
            pos[root_points[c][i]] = i;
          }

          // members and forward traversal words u_v from the root
          std::vector<uint32_t> members = {root};
          u_elt[root]                   = Transformation::identity(d);
          std::vector<bool> in_scc_seen(0);
          {
            std::vector<bool> seen(size_t(K) * K, false);
            seen[root] = true;
            for (size_t i = 0; i < members.size(); ++i) {
              auto v = members[i];
              for (uint32_t a = 0; a < gen_t.size(); ++a) {
                auto w = img_act[v / K][a] * K + img_act[v % K][a];
                if (scc_id[w] == c && !seen[w]) {
                  seen[w]   = true;
                  u_elt[w]  = u_elt[v] * gen_t[a];
                  members.push_back(w);
                }
              }
            }
          }

          // reverse traversal: for every member an element returning to
          // the root, corrected so that u_v . ubar_v fixes the root
          // pointwise (finite order of the induced permutation)
          {
            std::unordered_map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>>
                rev;  // node -> (pred, letter)
            for (auto v : members) {
              for (uint32_t a = 0; a < gen_t.size(); ++a) {
                auto w = img_act[v / K][a] * K + img_act[v % K][a];
                if (scc_id[w] == c) {
                  rev[w].emplace_back(v, a);
                }
              }
            }
            std::vector<Transformation> back(size_t(K) * K);
            std::vector<bool>           have(size_t(K) * K, false);
            back[root]       = Transformation::identity(d);
            have[root]       = true;
            std::vector<uint32_t> queue = {root};
            for (size_t i = 0; i < queue.size(); ++i) {
              auto w = queue[i];
              for (auto [v, a] : rev[w]) {
                if (!have[v]) {
                  have[v] = true;
                  back[v] = gen_t[a] * back[w];
                  queue.push_back(v);
                }
              }
            }
            for (auto v : members) {
              auto s = u_elt[v] * back[v];  // stabilises the root setwise
              std::vector<uint32_t> perm(root_points[c].size());
              for (uint32_t i = 0; i < root_points[c].size(); ++i) {
                perm[i] = pos[pair_apply(s, s, d, root_points[c][i])];
              }
              auto ord    = permutation_order(perm);
              ubar_elt[v] = ord == 1 ? back[v] : back[v] * s.pow(ord - 1);
            }
          }

          // Schreier generators of the stabiliser of the root
          std::vector<Permutation> schreier;
          for (auto v : members) {
            for (uint32_t a = 0; a < gen_t.size(); ++a) {
              auto w = img_act[v / K][a] * K + img_act[v % K][a];
              if (scc_id[w] != c) {
                continue;
              }
              auto g = u_elt[v] * gen_t[a] * ubar_elt[w];
              std::vector<uint32_t> perm(root_points[c].size());
              for (uint32_t i = 0; i < root_points[c].size(); ++i) {
                perm[i] = pos[pair_apply(g, g, d, root_points[c][i])];
              }
              schreier.emplace_back(std::move(perm));
            }
          }
          groups.emplace_back(std::move(schreier));
        }
      }

      uint32_t image_of(Transformation const& f) const {
        return image_index.at(points_key(f.image_set()));
      }

      std::string kernel_sig(Transformation const& x,
                             Transformation const& y, uint32_t scc) const {
        auto kx = x.kernel(), ky = y.kernel();
        std::string s(reinterpret_cast<char const*>(kx.data()),
                      kx.size() * sizeof(uint32_t));
        s.append(reinterpret_cast<char const*>(ky.data()),
                 ky.size() * sizeof(uint32_t));
        s.append(reinterpret_cast<char const*>(&scc), sizeof(uint32_t));
        return s;
      }

      //! Restriction of the pair (gx, gy) to the root points of scc c, or
      //! nullopt when the pair does not stabilise them setwise.
      std::optional<Permutation> restrict_to_root(Transformation const& gx,
                                                  Transformation const& gy,
                                                  uint32_t c) const {
        auto const& pts = root_points[c];
        auto const& pos = pos_of_point[c];
        std::vector<uint32_t> perm(pts.size());
        for (uint32_t i = 0; i < pts.size(); ++i) {
          auto q = pair_apply(gx, gy, d, pts[i]);
          if (pos[q] == UNDEFINED) {
            return std::nullopt;
          }
          perm[i] = pos[q];
        }
        Transformation p(std::move(perm));
        if (!is_permutation(p)) {
          return std::nullopt;
        }
        return p;
      }
    };

    struct PairRep {
      Transformation x, y;
      Transformation x_inv, y_inv;  // pseudo-inverses in U
      uint32_t       scc;
    };

  }  // namespace

  RelClassIndex relative_r_class_reps_group(FiniteMonoid const& M) {
    GroupEngine eng(M);

    std::vector<PairRep>                                   reps;
    std::unordered_map<std::string, std::vector<uint32_t>> candidates;

    auto add_rep = [&](Transformation x, Transformation y, uint32_t scc) {
      PairRep r;
      r.x_inv = x.pseudo_inverse();
      r.y_inv = y.pseudo_inverse();
      r.x     = std::move(x);
      r.y     = std::move(y);
      r.scc   = scc;
      candidates[eng.kernel_sig(r.x, r.y, scc)].push_back(
          static_cast<uint32_t>(reps.size()));
      reps.push_back(std::move(r));
    };

    // class of (x, y) among the existing representatives, or UNDEFINED
    auto classify = [&](Transformation const& tx, Transformation const& ty) {
      auto        p    = eng.image_of(tx) * eng.K + eng.image_of(ty);
      auto        c    = eng.scc_id[p];
      auto const& ubar = eng.ubar_elt[p];
      if (auto it = candidates.find(eng.kernel_sig(tx, ty, c));
          it != candidates.end()) {
        for (auto l : it->second) {
          auto perm = eng.restrict_to_root(reps[l].x_inv * tx * ubar,
                                           reps[l].y_inv * ty * ubar, c);
          if (perm && eng.groups[c].contains(*perm)) {
            return l;
          }
        }
      }
      return UNDEFINED;
    };

    {
      auto one = Transformation::identity(eng.d);
      add_rep(one, one, eng.scc_id[0]);  // pair image (full, full) is 0
    }

    // The relation is a left congruence for all of M x M, and left
    // multiplication by the diagonal alone cannot reach the classes of
    // non-diagonal pairs from (1, 1), so the frontier multiplies by the
    // ambient generators (a, 1) and (1, a). The diagonal-action word graph
    // is filled in afterwards.
    for (uint32_t i = 0; i < reps.size(); ++i) {
      for (uint32_t a = 0; a < eng.gen_t.size(); ++a) {
        for (int coord = 0; coord < 2; ++coord) {
          auto xx = coord == 0 ? eng.gen_t[a] * reps[i].x : reps[i].x;
          auto xy = coord == 1 ? eng.gen_t[a] * reps[i].y : reps[i].y;
          if (classify(xx, xy) == UNDEFINED) {
            auto p = eng.image_of(xx) * eng.K + eng.image_of(xy);
            auto const& ubar = eng.ubar_elt[p];
            add_rep(xx * ubar, xy * ubar, eng.scc_id[p]);
          }
        }
      }
    }

    RelClassIndex idx;
    idx.monoid_size = M.size;
    idx.representatives.reserve(reps.size());
    for (auto const& r : reps) {
      idx.representatives.emplace_back(eng.elem_index.at(r.x),
                                       eng.elem_index.at(r.y));
    }
    idx.action_graph
        = WordGraph(M.num_letters, static_cast<uint32_t>(reps.size()));
    for (uint32_t i = 0; i < reps.size(); ++i) {
      for (uint32_t a = 0; a < eng.gen_t.size(); ++a) {
        auto l = classify(eng.gen_t[a] * reps[i].x, eng.gen_t[a] * reps[i].y);
        if (l == UNDEFINED) {
          throw InputError("group engine failed to classify a diagonal "
                           "multiple; representatives are inconsistent");
        }
        idx.action_graph.add_edge(i, a, l);
      }
    }

    // classify every pair when that is affordable; used by cross-checks
    if (size_t(M.size) * M.size <= 100'000) {
      idx.class_of.assign(size_t(M.size) * M.size, UNDEFINED);
      for (uint32_t x = 0; x < M.size; ++x) {
        for (uint32_t y = 0; y < M.size; ++y) {
          auto l = classify(eng.transfs[x], eng.transfs[y]);
          if (l == UNDEFINED) {
            throw InputError("group engine failed to classify a pair; "
                             "representatives are inconsistent");
          }
          idx.class_of[size_t(x) * M.size + y] = l;
        }
      }
    }
    return idx;
  }

  RelClassIndex relative_l_class_reps_group(FiniteMonoid const& M) {
    return relative_r_class_reps_group(dual_monoid(M));
  }

  std::vector<std::pair<uint32_t, uint32_t>>
  reduced_generating_pairs(FiniteMonoid const& M, Side side,
                           bool group_engine) {
    RelClassIndex idx;
    switch (side) {
      case Side::right:
        idx = group_engine ? relative_r_class_reps_group(M)
                           : relative_r_class_reps_scc(M);
        break;
      case Side::left:
        idx = group_engine ? relative_l_class_reps_group(M)
                           : relative_l_class_reps_scc(M);
        break;
      case Side::twosided: {
        idx = group_engine ? relative_r_class_reps_group(M)
                           : relative_r_class_reps_scc(M);
        auto jreps = relative_j_class_reps(idx);
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (auto const& [x, y] : jreps) {
          if (x != y) {
            out.emplace_back(x, y);
          }
        }
        return out;
      }
    }
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (auto const& [x, y] : idx.representatives) {
      if (x != y) {
        out.emplace_back(x, y);
      }
    }
    return out;
  }

  PermutationGroup
  schreier_generators(std::vector<std::vector<uint32_t>> const& orbit,
                      std::vector<Transformation> const&        u,
                      std::vector<Transformation> const&        ubar,
                      std::vector<Transformation> const&        gens) {
    if (orbit.empty() || orbit.size() != u.size()
        || orbit.size() != ubar.size()) {
      throw InputError("orbit and trace element lists must have equal "
                       "nonzero length");
    }
    auto const& y0 = orbit[0];
    std::unordered_map<std::string, uint32_t> which;
    for (uint32_t i = 0; i < orbit.size(); ++i) {
      which.emplace(points_key(orbit[i]), i);
    }
    std::vector<uint32_t> pos(u[0].degree(), UNDEFINED);
    for (uint32_t i = 0; i < y0.size(); ++i) {
      pos[y0[i]] = i;
    }
    auto restrict_y0
        = [&](Transformation const& f) -> std::optional<Permutation> {
      std::vector<uint32_t> perm(y0.size());
      for (uint32_t i = 0; i < y0.size(); ++i) {
        auto q = f[y0[i]];
        if (pos[q] == UNDEFINED) {
          return std::nullopt;
        }
        perm[i] = pos[q];
      }
      Permutation p(std::move(perm));
      if (!is_permutation(p)) {
        return std::nullopt;
      }
      return p;
    };

    auto const id = Permutation::identity(static_cast<uint32_t>(y0.size()));
    for (uint32_t i = 0; i < orbit.size(); ++i) {
      auto round_trip = restrict_y0(u[i] * ubar[i]);
      if (!round_trip || !(*round_trip == id)) {
        throw InputError("trace elements fail the round-trip identity at "
                         "orbit position " + std::to_string(i));
      }
    }

    std::vector<Permutation> schreier;
    for (uint32_t i = 0; i < orbit.size(); ++i) {
      for (uint32_t a = 0; a < gens.size(); ++a) {
        auto target = apply_to_set(orbit[i], gens[a]);
        auto it     = which.find(points_key(target));
        if (it == which.end()) {
          continue;  // the action leaves the strongly connected component
        }
        auto g    = u[i] * gens[a] * ubar[it->second];
        auto perm = restrict_y0(g);
        if (!perm) {
          throw InputError("u_i a ubar_j does not stabilise Y_0");
        }
        schreier.push_back(std::move(*perm));
      }
    }
    return PermutationGroup(std::move(schreier));
  }

}  // namespace congkit

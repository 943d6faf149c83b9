#include "congkit/word_graph.hpp"

#include <algorithm>
#include <queue>

namespace congkit {

  WordGraph::WordGraph(uint32_t alphabet_size, uint32_t number_of_nodes)
      : _alphabet_size(alphabet_size),
        _number_of_nodes(number_of_nodes),
        _targets(size_t(alphabet_size) * number_of_nodes, UNDEFINED) {}

  void WordGraph::add_nodes(uint32_t count) {
    _number_of_nodes += count;
    _targets.resize(size_t(_alphabet_size) * _number_of_nodes, UNDEFINED);
  }

  void WordGraph::add_edge(node_type s, letter_type a, node_type t) {
    if (s >= _number_of_nodes || t >= _number_of_nodes) {
      throw InputError("edge endpoint out of range");
    }
    if (a >= _alphabet_size) {
      throw InputError("edge label out of range");
    }
    auto& slot = _targets[size_t(s) * _alphabet_size + a];
    if (slot == t) {
      return;  // exact duplicate
    }
    if (slot != UNDEFINED) {
      _nondeterministic = true;
      if (std::find(_edges.begin(), _edges.end(), Edge{s, a, t})
          != _edges.end()) {
        return;
      }
    } else {
      slot = t;
    }
    _edges.push_back({s, a, t});
  }

  void WordGraph::reserve(uint32_t nodes, uint32_t edges) {
    _targets.reserve(size_t(nodes) * _alphabet_size);
    _edges.reserve(edges);
  }

  void WordGraph::remove_last_edge() {
    if (_edges.empty()) {
      throw InputError("no edge to remove");
    }
    if (_nondeterministic) {
      throw InputError("remove_last_edge requires a deterministic graph");
    }
    auto const& e = _edges.back();
    _targets[size_t(e.source) * _alphabet_size + e.label] = UNDEFINED;
    _edges.pop_back();
  }

  void WordGraph::shrink_to_nodes(uint32_t count) {
    if (count > _number_of_nodes) {
      throw InputError("shrink_to_nodes cannot grow the graph");
    }
    _number_of_nodes = count;
    _targets.resize(size_t(_alphabet_size) * count);
  }

  bool WordGraph::is_complete() const {
    if (_nondeterministic) {
      // the dense table only records first targets; fall back on the edges
      std::vector<bool> seen(size_t(_number_of_nodes) * _alphabet_size, false);
      for (auto const& e : _edges) {
        seen[size_t(e.source) * _alphabet_size + e.label] = true;
      }
      return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    return std::none_of(_targets.begin(), _targets.end(),
                        [](node_type t) { return t == UNDEFINED; });
  }

  bool WordGraph::operator==(WordGraph const& that) const {
    if (_alphabet_size != that._alphabet_size
        || _number_of_nodes != that._number_of_nodes) {
      return false;
    }
    if (!_nondeterministic && !that._nondeterministic) {
      return _targets == that._targets;
    }
    auto mine = _edges, theirs = that._edges;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    theirs.erase(std::unique(theirs.begin(), theirs.end()), theirs.end());
    return mine == theirs;
  }

  std::vector<node_type> WordGraph::unreachable_nodes(node_type start) const {
    std::vector<bool> seen(_number_of_nodes, false);
    if (start < _number_of_nodes) {
      std::vector<node_type> stack = {start};
      seen[start]                  = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (letter_type a = 0; a < _alphabet_size; ++a) {
          auto t = target(v, a);
          if (t != UNDEFINED && !seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
        }
      }
      if (_nondeterministic) {
        // include targets hidden behind the first-target table
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& e : _edges) {
            if (seen[e.source] && !seen[e.target]) {
              seen[e.target] = true;
              changed        = true;
            }
          }
        }
      }
    }
    std::vector<node_type> out;
    for (node_type v = 0; v < _number_of_nodes; ++v) {
      if (!seen[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::string WordGraph::canonical_key() const {
    if (_nondeterministic) {
      throw InputError("canonical_key requires a deterministic word graph");
    }
    std::string key;
    key.reserve(_targets.size() * 4 + 4);
    auto push = [&key](uint32_t x) {
      for (int i = 0; i < 4; ++i) {
        key.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
      }
    };
    push(_number_of_nodes);
    for (auto t : _targets) {
      push(t);
    }
    return key;
  }

  std::optional<node_type>
  follow_path(WordGraph const& g, node_type start, word_type const& w) {
    if (!g.is_deterministic()) {
      throw InputError("follow_path requires a deterministic word graph");
    }
    if (start >= g.number_of_nodes()) {
      throw InputError("start node out of range");
    }
    node_type v = start;
    for (auto a : w) {
      if (a >= g.alphabet_size()) {
        throw InputError("letter out of range");
      }
      v = g.target(v, a);
      if (v == UNDEFINED) {
        return std::nullopt;
      }
    }
    return v;
  }

  bool is_compatible(WordGraph const& g, Presentation const& p) {
    if (g.alphabet_size() != p.alphabet_size) {
      throw InputError("alphabet sizes of graph and presentation differ");
    }
    for (node_type v = 0; v < g.number_of_nodes(); ++v) {
      for (auto const& [u, w] : p.relations) {
        auto x = follow_path(g, v, u);
        auto y = follow_path(g, v, w);
        if (x && y && *x != *y) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // BFS from 0, scanning letters in order: discovery order is exactly the
    // short-lex order of minimal access words.
    std::vector<node_type> standard_relabelling(WordGraph const& g) {
      std::vector<node_type> newlab(g.number_of_nodes(), UNDEFINED);
      std::queue<node_type>  queue;
      node_type              next = 0;
      newlab[0]                   = next++;
      queue.push(0);
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (letter_type a = 0; a < g.alphabet_size(); ++a) {
          auto t = g.target(v, a);
          if (t != UNDEFINED && newlab[t] == UNDEFINED) {
            newlab[t] = next++;
            queue.push(t);
          }
        }
      }
      return newlab;
    }
  }  // namespace

  WordGraph standardize(WordGraph const& g) {
    if (g.empty()) {
      return g;
    }
    if (!g.is_deterministic()) {
      throw InputError("standardize requires a deterministic word graph");
    }
    if (!g.unreachable_nodes(0).empty()) {
      throw InputError("standardize: a node is unreachable from 0");
    }
    auto      newlab = standard_relabelling(g);
    WordGraph out(g.alphabet_size(), g.number_of_nodes());
    // old labels in order of their new label, so edges come out row-major
    std::vector<node_type> oldlab(g.number_of_nodes());
    for (node_type v = 0; v < g.number_of_nodes(); ++v) {
      oldlab[newlab[v]] = v;
    }
    for (node_type v = 0; v < g.number_of_nodes(); ++v) {
      for (letter_type a = 0; a < g.alphabet_size(); ++a) {
        auto t = g.target(oldlab[v], a);
        if (t != UNDEFINED) {
          out.add_edge(v, a, newlab[t]);
        }
      }
    }
    return out;
  }

  bool is_standard(WordGraph const& g) {
    if (g.empty()) {
      return true;
    }
    return standardize(g) == g;
  }

  bool equal_as_congruences(WordGraph const& g0, WordGraph const& g1) {
    if (!is_standard(g0) || !is_standard(g1)) {
      throw InputError("equal_as_congruences requires standard word graphs");
    }
    return g0 == g1;
  }

  std::optional<std::vector<node_type>>
  homomorphism_fixing_zero(WordGraph const& g0, WordGraph const& g1) {
    if (g0.alphabet_size() != g1.alphabet_size()) {
      throw InputError("alphabet sizes differ");
    }
    if (g0.empty() || g1.empty()) {
      return std::nullopt;
    }
    std::vector<node_type> phi(g0.number_of_nodes(), UNDEFINED);
    std::vector<node_type> stack = {0};
    phi[0]                       = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (letter_type a = 0; a < g0.alphabet_size(); ++a) {
        auto t = g0.target(v, a);
        if (t == UNDEFINED) {
          continue;
        }
        auto image = g1.target(phi[v], a);
        if (image == UNDEFINED) {
          return std::nullopt;  // edge cannot be preserved
        }
        if (phi[t] == UNDEFINED) {
          phi[t] = image;
          stack.push_back(t);
        } else if (phi[t] != image) {
          return std::nullopt;  // conflict
        }
      }
    }
    return phi;
  }

  std::pair<WordGraph, node_type> disjoint_union(WordGraph const& g0,
                                                 WordGraph const& g1) {
    if (!g0.empty() && !g1.empty()
        && g0.alphabet_size() != g1.alphabet_size()) {
      throw InputError("alphabet sizes differ");
    }
    auto      m = std::max(g0.alphabet_size(), g1.alphabet_size());
    WordGraph out(m, g0.number_of_nodes() + g1.number_of_nodes());
    auto      offset = g0.number_of_nodes();
    for (auto const& e : g0.edges()) {
      out.add_edge(e.source, e.label, e.target);
    }
    for (auto const& e : g1.edges()) {
      out.add_edge(e.source + offset, e.label, e.target + offset);
    }
    return {out, offset};
  }

  WordGraph quotient(WordGraph const& g, NodePartition const& kappa) {
    if (kappa.size() != g.number_of_nodes()) {
      throw InputError("partition size differs from node count");
    }
    auto nf = kappa.normal_form();
    // dense labels for the parts, in order of least member
    std::vector<node_type> label(g.number_of_nodes(), UNDEFINED);
    node_type              parts = 0;
    for (node_type v = 0; v < g.number_of_nodes(); ++v) {
      if (nf[v] == v) {
        label[v] = parts++;
      }
    }
    WordGraph out(g.alphabet_size(), parts);
    for (auto const& e : g.edges()) {
      out.add_edge(label[nf[e.source]], e.label, label[nf[e.target]]);
    }
    return out;
  }

  std::optional<WordGraph>
  action_to_word_graph(std::vector<std::vector<node_type>> const& table,
                       node_type                                  basepoint) {
    auto n = static_cast<uint32_t>(table.size());
    if (n == 0 || basepoint >= n) {
      throw InputError("empty table or basepoint out of range");
    }
    auto m = static_cast<uint32_t>(table[0].size());
    for (auto const& row : table) {
      if (row.size() != m) {
        throw InputError("ragged action table");
      }
      for (auto t : row) {
        if (t >= n) {
          throw InputError("action table value out of range");
        }
      }
    }
    WordGraph g(m, n);
    for (node_type v = 0; v < n; ++v) {
      for (letter_type a = 0; a < m; ++a) {
        g.add_edge(v, a, table[v][a]);
      }
    }
    if (!g.unreachable_nodes(basepoint).empty()) {
      return std::nullopt;
    }
    if (basepoint != 0) {
      // swap 0 and the basepoint, then standardize as usual
      WordGraph h(m, n);
      auto      relabel = [&](node_type v) -> node_type {
        if (v == basepoint) {
          return 0;
        }
        if (v == 0) {
          return basepoint;
        }
        return v;
      };
      for (node_type v = 0; v < n; ++v) {
        for (letter_type a = 0; a < m; ++a) {
          h.add_edge(relabel(v), a, relabel(table[v][a]));
        }
      }
      return standardize(h);
    }
    return standardize(g);
  }

  bool PathRelationSample::related(word_type const& u,
                                   word_type const& v) const {
    node_type x = UNDEFINED, y = UNDEFINED;
    for (auto const& [w, t] : traced) {
      if (w == u) {
        x = t;
      }
      if (w == v) {
        y = t;
      }
    }
    return x != UNDEFINED && x == y;
  }

  std::vector<std::pair<word_type, word_type>>
  PathRelationSample::pairs() const {
    std::vector<std::pair<word_type, word_type>> out;
    for (auto const& [u, x] : traced) {
      for (auto const& [v, y] : traced) {
        if (x == y) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  PathRelationSample path_relation_sample(WordGraph const& g,
                                          node_type        basepoint,
                                          size_t           max_length) {
    PathRelationSample sample;
    sample.basepoint = basepoint;
    // grow words breadth-first so the sample is closed under prefixes
    std::vector<std::pair<word_type, node_type>> frontier
        = {{word_type{}, basepoint}};
    sample.traced = frontier;
    for (size_t len = 1; len <= max_length; ++len) {
      std::vector<std::pair<word_type, node_type>> next;
      for (auto const& [w, v] : frontier) {
        for (letter_type a = 0; a < g.alphabet_size(); ++a) {
          auto t = g.target(v, a);
          if (t != UNDEFINED) {
            auto wa = w;
            wa.push_back(a);
            next.emplace_back(std::move(wa), t);
          }
        }
      }
      sample.traced.insert(sample.traced.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return sample;
  }

}  // namespace congkit

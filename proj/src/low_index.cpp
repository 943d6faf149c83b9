#include "congkit/low_index.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

namespace congkit {

  namespace detail {

    // Exploration of one search node: the pending edge is applied, its
    // consequences under the relations are propagated (deduction closure),
    // and either the graph is complete (a congruence) or the candidate
    // targets of the first missing edge slot are pushed.
    //
    // The deduction closure is incremental: a new edge (s, a, t) can only
    // affect relation instances whose trace path uses that edge, so for
    // each occurrence of the letter a at position pos of a relation word w
    // we enumerate the start nodes x with x -- w[0..pos) --> s by walking
    // the predecessor lists backwards, and re-check just those instances.
    // The full node-by-relation rescan is kept behind cfg.full_rescan as an
    // oracle.
    class Engine {
     public:
      Engine(Presentation const& p, SearchConfig const& cfg)
          : _cfg(cfg),
            _max_nodes(cfg.max_classes + (cfg.semigroup_mode ? 1 : 0)) {
        if (cfg.max_classes < 1) {
          throw InputError("max_classes must be at least 1");
        }
        p.validate();
        Presentation q = cfg.side == CongruenceSide::left ? reverse(p) : p;
        _m             = q.alphabet_size;
        for (auto& rel : q.relations) {
          if (rel.first != rel.second) {
            _rels.push_back(std::move(rel));
          }
        }
        _occ.resize(_m);
        for (uint32_t r = 0; r < _rels.size(); ++r) {
          for (uint8_t side = 0; side < 2; ++side) {
            auto const& w = side == 0 ? _rels[r].first : _rels[r].second;
            for (uint32_t pos = 0; pos < w.size(); ++pos) {
              _occ[w[pos]].push_back({r, side, pos});
            }
          }
        }
        _containing = cfg.containing;
        for (auto& [u, v] : _containing) {
          for (auto const& w : {u, v}) {
            for (auto a : w) {
              if (a >= _m) {
                throw InputError("containing pair uses a letter that is not "
                                 "in the alphabet");
              }
            }
          }
          if (cfg.side == CongruenceSide::left) {
            std::reverse(u.begin(), u.end());
            std::reverse(v.begin(), v.end());
          }
        }
        _preim_head.assign(size_t(_max_nodes) * _m, UNDEFINED);
        _preim_next.assign(size_t(_max_nodes) * _m, UNDEFINED);
      }

      uint32_t alphabet_size() const {
        return _m;
      }
      uint32_t max_nodes() const {
        return _max_nodes;
      }

      void init_state(SearchState& st) {
        st.graph = WordGraph(_m, 1);
        st.graph.reserve(_max_nodes, size_t(_max_nodes) * _m);
        st.stack.clear();
        st.max_classes = _cfg.max_classes;
        st.steps       = 0;
        st.peak_stack  = 0;
        attach(st, 0);
        if (_m == 0) {
          return;  // the lone 1-node graph is handled by the callers
        }
        if (!_cfg.semigroup_mode) {
          st.stack.push_back({0, 0, 0, 1, 0});
        }
        if (_max_nodes > 1) {
          st.stack.push_back({0, 0, 1, 1, 0});
        }
      }

      //! Rebuild the predecessor lists from st.graph; the first `processed`
      //! edges are taken to be deduction-closed already.
      void attach(SearchState& st, size_t processed) {
        if (!st.graph.empty() && st.graph.alphabet_size() != _m) {
          throw InputError("state graph alphabet does not match");
        }
        if (st.graph.number_of_nodes() > _max_nodes) {
          throw InputError("state graph has more nodes than the class bound");
        }
        std::fill(_preim_head.begin(), _preim_head.end(), UNDEFINED);
        std::fill(_preim_next.begin(), _preim_next.end(), UNDEFINED);
        st.graph.reserve(_max_nodes, size_t(_max_nodes) * _m);
        for (auto const& e : st.graph.edges()) {
          preim_push(e.source, e.label, e.target);
        }
        _processed = processed;
      }

      void load_seed(SearchState& st, node_type num_nodes,
                     std::vector<WordGraph::Edge> const& prefix,
                     PendingDefinition const&            pd) {
        st.graph = WordGraph(_m, num_nodes);
        st.graph.reserve(_max_nodes, size_t(_max_nodes) * _m);
        for (auto const& e : prefix) {
          st.graph.add_edge(e.source, e.label, e.target);
        }
        st.stack.assign(1, pd);
        attach(st, prefix.size());
      }

      //! One iteration of the outer search loop; true iff st.graph now
      //! holds the next congruence word graph.
      bool next(SearchState& st) {
        while (!st.stack.empty()) {
          ++st.steps;
          if (_cfg.step_budget != 0 && st.steps > _cfg.step_budget) {
            throw BudgetError("step budget ("
                              + std::to_string(_cfg.step_budget)
                              + ") exhausted");
          }
          if (_hook != nullptr && ++_since_hook >= kHookInterval) {
            _since_hook = 0;
            _hook(st);
          }
          auto pd = st.stack.back();
          st.stack.pop_back();
          truncate(st, pd.num_nodes, pd.num_edges);
          define(st, pd.source, pd.label, pd.target);
          if (try_define(st, pd.source)) {
            return true;
          }
        }
        // search exhausted: leave the empty-graph sentinel
        st.graph = WordGraph();
        std::fill(_preim_head.begin(), _preim_head.end(), UNDEFINED);
        std::fill(_preim_next.begin(), _preim_next.end(), UNDEFINED);
        _processed = 0;
        return false;
      }

      bool try_define(SearchState& st, node_type scan_from) {
        if (!process_definitions(st)) {
          return false;
        }
        for (auto const& [u, v] : _containing) {
          node_type x, y;
          auto      iu = trace(st.graph, 0, u, x);
          auto      iv = trace(st.graph, 0, v, y);
          // only fully traced pairs can rule the node out; a partial trace
          // may still be completed below this node
          if (iu == u.size() && iv == v.size() && x != y) {
            return false;
          }
        }
        auto const theta = st.graph.number_of_nodes();
        for (node_type g = scan_from; g < theta; ++g) {
          for (letter_type a = 0; a < _m; ++a) {
            if (st.graph.target(g, a) == UNDEFINED) {
              auto k = static_cast<uint32_t>(st.graph.edges().size());
              for (node_type t = _cfg.semigroup_mode ? 1 : 0; t < theta;
                   ++t) {
                st.stack.push_back({g, a, t, theta, k});
              }
              if (theta < _max_nodes) {
                st.stack.push_back({g, a, theta, theta, k});
              }
              st.peak_stack = std::max(st.peak_stack, st.stack.size());
              return false;
            }
          }
        }
        return true;
      }

      bool process_definitions(SearchState& st) {
        auto const& edges = st.graph.edges();
        while (_processed < edges.size()) {
          auto const e = edges[_processed];
          ++_processed;
          if (_cfg.full_rescan) {
            if (!rescan_all(st)) {
              return false;
            }
          } else {
            for (auto const& occ : _occ[e.label]) {
              auto const& w
                  = occ.side == 0 ? _rels[occ.rel].first : _rels[occ.rel].second;
              if (!backward(st, e.source, w, occ.pos, occ.rel)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void set_hook(std::function<void(SearchState&)> hook) {
        _hook = std::move(hook);
      }

      static constexpr uint32_t kHookInterval = 512;

     private:
      struct Occurrence {
        uint32_t rel;
        uint8_t  side;
        uint32_t pos;
      };

      void preim_push(node_type s, letter_type a, node_type t) {
        auto& head                      = _preim_head[size_t(t) * _m + a];
        _preim_next[size_t(s) * _m + a] = head;
        head                            = s;
      }

      void define(SearchState& st, node_type s, letter_type a, node_type t) {
        if (t == st.graph.number_of_nodes()) {
          st.graph.add_nodes(1);
        }
        st.graph.add_edge(s, a, t);
        preim_push(s, a, t);
      }

      void truncate(SearchState& st, node_type nodes, uint32_t num_edges) {
        auto& g = st.graph;
        while (g.edges().size() > num_edges) {
          auto const& e = g.edges().back();
          // edges are removed in exact reverse insertion order, so e is the
          // head of its predecessor list
          _preim_head[size_t(e.target) * _m + e.label]
              = _preim_next[size_t(e.source) * _m + e.label];
          g.remove_last_edge();
        }
        g.shrink_to_nodes(nodes);
        _processed = num_edges;
      }

      //! Letters of w consumed from `start`; `out` is the node reached.
      static uint32_t trace(WordGraph const& g, node_type start,
                            word_type const& w, node_type& out) {
        node_type v = start;
        uint32_t  i = 0;
        for (; i < w.size(); ++i) {
          auto t = g.target(v, w[i]);
          if (t == UNDEFINED) {
            break;
          }
          v = t;
        }
        out = v;
        return i;
      }

      bool check_instance(SearchState& st, node_type sigma, uint32_t r) {
        auto const& u  = _rels[r].first;
        auto const& v  = _rels[r].second;
        node_type   x, y;
        auto        iu = trace(st.graph, sigma, u, x);
        auto        iv = trace(st.graph, sigma, v, y);
        bool        fu = iu == u.size();
        bool        fv = iv == v.size();
        if (fu && fv) {
          return x == y;
        }
        if (fu && iv + 1 == v.size()) {
          return deduce(st, y, v[iv], x);
        }
        if (fv && iu + 1 == u.size()) {
          return deduce(st, x, u[iu], y);
        }
        return true;
      }

      bool deduce(SearchState& st, node_type s, letter_type a, node_type t) {
        if (_cfg.semigroup_mode && t == 0) {
          return false;  // a forced edge into node 0 kills the subtree
        }
        define(st, s, a, t);
        return true;
      }

      // all start nodes x with x --w[0..pos)--> node, via predecessor lists
      bool backward(SearchState& st, node_type node, word_type const& w,
                    uint32_t pos, uint32_t r) {
        if (pos == 0) {
          return check_instance(st, node, r);
        }
        auto const a = w[pos - 1];
        for (auto s = _preim_head[size_t(node) * _m + a]; s != UNDEFINED;
             s      = _preim_next[size_t(s) * _m + a]) {
          if (!backward(st, s, w, pos - 1, r)) {
            return false;
          }
        }
        return true;
      }

      bool rescan_all(SearchState& st) {
        for (node_type v = 0; v < st.graph.number_of_nodes(); ++v) {
          for (uint32_t r = 0; r < _rels.size(); ++r) {
            if (!check_instance(st, v, r)) {
              return false;
            }
          }
        }
        return true;
      }

      SearchConfig                              _cfg;
      uint32_t                                  _m = 0;
      uint32_t                                  _max_nodes;
      std::vector<std::pair<word_type, word_type>> _rels;
      std::vector<std::pair<word_type, word_type>> _containing;
      std::vector<std::vector<Occurrence>>      _occ;
      std::vector<node_type>                    _preim_head;
      std::vector<node_type>                    _preim_next;
      size_t                                    _processed  = 0;
      uint32_t                                  _since_hook = 0;
      std::function<void(SearchState&)>         _hook;
    };

  }  // namespace detail

  size_t compatible_incremental(Presentation const& p, WordGraph& g,
                                bool full_rescan) {
    if (g.edges().empty()) {
      throw InputError("compatible_incremental requires at least one edge");
    }
    if (!g.is_deterministic()) {
      throw InputError("compatible_incremental requires a deterministic "
                       "graph");
    }
    SearchConfig cfg;
    cfg.max_classes = g.number_of_nodes();
    cfg.full_rescan = full_rescan;
    detail::Engine engine(p, cfg);
    SearchState    st;
    st.graph = std::move(g);
    engine.attach(st, 0);
    bool ok = engine.process_definitions(st);
    g       = std::move(st.graph);
    return ok ? g.edges().size() : 0;
  }

  SearchState initial_search_state(Presentation const& p,
                                   SearchConfig const& cfg) {
    detail::Engine engine(p, cfg);
    SearchState    st;
    engine.init_state(st);
    return st;
  }

  bool try_define_edge(Presentation const& p, SearchConfig const& cfg,
                       SearchState& st) {
    if (st.graph.edges().empty()) {
      throw InputError("try_define_edge requires a graph with an edge");
    }
    detail::Engine engine(p, cfg);
    engine.attach(st, st.graph.edges().size() - 1);
    return engine.try_define(st, st.graph.edges().back().source);
  }

  std::optional<WordGraph> next_right_congruence(Presentation const& p,
                                                 SearchConfig const& cfg,
                                                 SearchState&        st) {
    detail::Engine engine(p, cfg);
    engine.attach(st, st.graph.edges().size());
    if (engine.next(st)) {
      return st.graph;
    }
    return std::nullopt;
  }

  CongruenceStream::CongruenceStream(Presentation p, SearchConfig cfg)
      : _engine(std::make_unique<detail::Engine>(p, cfg)),
        _exhausted(false),
        _empty_alphabet_pending(p.alphabet_size == 0) {
    _engine->init_state(_state);
  }

  CongruenceStream::~CongruenceStream()                           = default;
  CongruenceStream::CongruenceStream(CongruenceStream&&) noexcept = default;

  std::optional<WordGraph> CongruenceStream::next() {
    if (_exhausted) {
      return std::nullopt;
    }
    if (_empty_alphabet_pending) {
      _empty_alphabet_pending = false;
      _exhausted              = true;
      return WordGraph(0, 1);
    }
    if (_engine->next(_state)) {
      return _state.graph;
    }
    _exhausted = true;
    return std::nullopt;
  }

  void for_each_congruence(Presentation const& p, SearchConfig const& cfg,
                           std::function<bool(WordGraph const&)> const& fn) {
    CongruenceStream stream(p, cfg);
    if (stream._empty_alphabet_pending) {
      fn(WordGraph(0, 1));
      return;
    }
    while (stream._engine->next(stream._state)) {
      if (!fn(stream._state.graph)) {
        return;
      }
    }
  }

  uint64_t count_congruences(Presentation const& p, SearchConfig const& cfg) {
    uint64_t count = 0;
    for_each_congruence(p, cfg, [&count](WordGraph const&) {
      ++count;
      return true;
    });
    return count;
  }

  namespace {

    struct Seed {
      std::vector<WordGraph::Edge> prefix;
      node_type                    num_nodes;
      PendingDefinition            pd;
    };

    struct SeedPool {
      explicit SeedPool(uint32_t n) : threads(n) {}

      std::mutex              mx;
      std::condition_variable cv;
      std::deque<Seed>        queue;
      uint32_t                threads;
      uint32_t                waiting = 0;
      bool                    done    = false;
      std::atomic<bool>       stop{false};
      std::atomic<size_t>     approx_size{0};

      void push(Seed s) {
        {
          std::lock_guard<std::mutex> lock(mx);
          queue.push_back(std::move(s));
          approx_size.store(queue.size(), std::memory_order_relaxed);
        }
        cv.notify_one();
      }

      std::optional<Seed> get() {
        std::unique_lock<std::mutex> lock(mx);
        ++waiting;
        while (queue.empty() && !done) {
          if (waiting == threads || stop.load()) {
            done = true;
            cv.notify_all();
            break;
          }
          cv.wait(lock);
        }
        --waiting;
        if (queue.empty()) {
          return std::nullopt;
        }
        Seed s = std::move(queue.front());
        queue.pop_front();
        approx_size.store(queue.size(), std::memory_order_relaxed);
        return s;
      }

      bool hungry() const {
        return approx_size.load(std::memory_order_relaxed) < threads;
      }
    };

    struct StopSearch {};

    void parallel_run(Presentation const& p, SearchConfig const& cfg,
                      uint32_t                                     threads,
                      std::function<void(WordGraph const&)> const& fn) {
      if (p.alphabet_size == 0) {
        fn(WordGraph(0, 1));
        return;
      }
      if (threads < 1) {
        throw InputError("thread count must be at least 1");
      }
      if (threads == 1) {
        for_each_congruence(p, cfg, [&fn](WordGraph const& g) {
          fn(g);
          return true;
        });
        return;
      }

      SeedPool pool(threads);
      {
        // root seeds: the initial stack entries, each a disjoint subtree
        SearchState root = initial_search_state(p, cfg);
        for (auto const& pd : root.stack) {
          pool.push(Seed{{}, 1, pd});
        }
      }

      std::atomic<uint64_t>    total_steps{0};
      std::atomic<bool>        budget_hit{false};
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(threads);

      for (uint32_t w = 0; w < threads; ++w) {
        workers.emplace_back([&, w]() {
          try {
            SearchConfig local_cfg = cfg;
            local_cfg.step_budget  = 0;  // budget enforced globally
            detail::Engine engine(p, local_cfg);
            SearchState    st;
            uint64_t       reported = 0;
            engine.set_hook([&](SearchState& s) {
              if (pool.stop.load(std::memory_order_relaxed)) {
                throw StopSearch();
              }
              if (cfg.step_budget != 0) {
                total_steps += s.steps - reported;
                reported = s.steps;
                if (total_steps.load() > cfg.step_budget) {
                  budget_hit.store(true);
                  pool.stop.store(true);
                  throw StopSearch();
                }
              }
              if (pool.hungry() && s.stack.size() > 1) {
                auto const& pd = s.stack.front();
                Seed        seed;
                seed.num_nodes = pd.num_nodes;
                seed.pd        = pd;
                seed.prefix.assign(s.graph.edges().begin(),
                                   s.graph.edges().begin() + pd.num_edges);
                s.stack.erase(s.stack.begin());
                pool.push(std::move(seed));
              }
            });
            while (auto seed = pool.get()) {
              engine.load_seed(st, seed->num_nodes, seed->prefix, seed->pd);
              while (engine.next(st)) {
                fn(st.graph);
              }
              if (cfg.step_budget != 0) {
                total_steps += st.steps - reported;
                reported = st.steps;
                if (total_steps.load() > cfg.step_budget) {
                  budget_hit.store(true);
                  pool.stop.store(true);
                  break;
                }
              }
            }
          } catch (StopSearch const&) {
            // cancelled: fall through to termination
          } catch (...) {
            errors[w] = std::current_exception();
            pool.stop.store(true);
          }
          {
            std::lock_guard<std::mutex> lock(pool.mx);
            pool.done = true;
          }
          pool.cv.notify_all();
        });
      }
      for (auto& t : workers) {
        t.join();
      }
      for (auto const& err : errors) {
        if (err) {
          std::rethrow_exception(err);
        }
      }
      if (budget_hit.load()) {
        throw BudgetError("step budget (" + std::to_string(cfg.step_budget)
                          + ") exhausted");
      }
    }

  }  // namespace

  uint64_t parallel_count_congruences(Presentation const& p,
                                      SearchConfig const& cfg,
                                      uint32_t            threads) {
    std::atomic<uint64_t> count{0};
    parallel_run(p, cfg, threads, [&count](WordGraph const&) { ++count; });
    return count.load();
  }

  void parallel_for_each_congruence(
      Presentation const& p, SearchConfig const& cfg, uint32_t threads,
      std::function<void(WordGraph const&)> const& fn) {
    parallel_run(p, cfg, threads, fn);
  }

}  // namespace congkit

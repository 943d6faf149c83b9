//
// congkit command line: enumeration of one-sided congruences of finitely
// presented monoids, congruence lattices of finite monoids, relative
// Green's class representatives, join/meet/standardize of word graphs, and
// a benchmark harness. Results go to stdout, run reports to stderr as
// JSON, so graphs can be piped between subcommands.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "congkit/congruence.hpp"
#include "congkit/fixtures.hpp"
#include "congkit/io.hpp"
#include "congkit/lattice_ops.hpp"
#include "congkit/low_index.hpp"
#include "congkit/rel_greens.hpp"

namespace {

  using namespace congkit;
  using nlohmann::json;
  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  uint32_t default_threads() {
    if (char const* env = std::getenv("CONGKIT_THREADS")) {
      auto v = std::strtoul(env, nullptr, 10);
      if (v >= 1) {
        return static_cast<uint32_t>(v);
      }
    }
    return 1;
  }

  void write_output(std::string const& path, std::string const& content) {
    if (path.empty() || path == "-") {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') {
        std::cout << '\n';
      }
      return;
    }
    std::ofstream f(path);
    if (!f) {
      throw InputError("cannot open output file: " + path);
    }
    f << content;
  }

  Side parse_side(std::string const& s) {
    if (s == "right") {
      return Side::right;
    }
    if (s == "left") {
      return Side::left;
    }
    if (s == "twosided" || s == "2" || s == "two-sided") {
      return Side::twosided;
    }
    throw InputError("side must be right, left or twosided");
  }

  struct MonoidSource {
    std::string table_file, gens_file, mat_file;

    void add_options(CLI::App* cmd) {
      auto* t = cmd->add_option("--table", table_file,
                                "multiplication table fixture");
      auto* g = cmd->add_option("--gens", gens_file,
                                "transformation generators fixture");
      auto* m = cmd->add_option("--mat", mat_file,
                                "matrix generators fixture");
      t->excludes(g)->excludes(m);
      g->excludes(m);
    }

    FiniteMonoid load() const {
      if (!table_file.empty()) {
        return from_table(read_table(table_file));
      }
      if (!gens_file.empty()) {
        return froidure_pin(read_transformations(gens_file));
      }
      if (!mat_file.empty()) {
        return froidure_pin(read_matrices(mat_file));
      }
      throw InputError("one of --table, --gens or --mat is required");
    }
  };

  struct EnumArgs {
    std::string presentation_file;
    uint32_t    max_classes = 1;
    std::string side        = "right";
    bool        semigroup   = false;
    std::string containing_file;
    uint32_t    threads = default_threads();
    bool        count_only = false;
    std::string out;
    uint64_t    step_budget = 0;
    bool        audit       = false;
  };

  int run_enum(EnumArgs const& args) {
    auto start = Clock::now();
    auto p     = parse_presentation_file(args.presentation_file);

    SearchConfig cfg;
    cfg.max_classes    = args.max_classes;
    cfg.side           = parse_side(args.side) == Side::left
                             ? CongruenceSide::left
                             : CongruenceSide::right;
    cfg.semigroup_mode = args.semigroup || p.kind == PresentationKind::semigroup;
    cfg.step_budget    = args.step_budget;
    if (!args.containing_file.empty()) {
      cfg.containing = read_pairs(args.containing_file, p);
    }

    uint64_t                        count = 0;
    std::mutex                      sink_mutex;
    std::unordered_set<std::string> audit_keys;
    std::ostringstream              sink;
    auto handle = [&](WordGraph const& g) {
      std::lock_guard<std::mutex> lock(sink_mutex);
      ++count;
      if (args.audit) {
        if (!g.is_deterministic() || !g.is_complete() || !is_standard(g)
            || (g.alphabet_size() == p.alphabet_size
                && !is_compatible(g, cfg.side == CongruenceSide::left
                                         ? reverse(p)
                                         : p))) {
          throw InputError("audit failed: emitted graph is not a standard "
                           "compatible word graph");
        }
        if (!audit_keys.insert(g.canonical_key()).second) {
          throw InputError("audit failed: duplicate graph emitted");
        }
      }
      if (!args.count_only) {
        sink << word_graph_to_json(g) << '\n';
      }
    };

    if (args.threads <= 1) {
      for_each_congruence(p, cfg, [&](WordGraph const& g) {
        handle(g);
        return true;
      });
    } else {
      parallel_for_each_congruence(p, cfg, args.threads, handle);
    }

    if (args.count_only) {
      std::cout << count << "\n";
    } else {
      write_output(args.out, sink.str());
    }

    json report = {{"command", "enum"},
                   {"presentation", args.presentation_file},
                   {"max_classes", args.max_classes},
                   {"side", args.side},
                   {"count", count},
                   {"threads", args.threads},
                   {"wall_s", seconds_since(start)}};
    std::cerr << report.dump() << "\n";
    return 0;
  }

  int run_lattice(MonoidSource const& src, std::string const& side_str,
                  bool reduce_greens, std::string const& format,
                  bool count_only, std::string const& out) {
    auto start = Clock::now();
    auto M     = src.load();
    auto side  = parse_side(side_str);
    auto lat   = congruence_lattice(M, side, reduce_greens);
    if (count_only) {
      std::cout << lat.elements.size() << "\n";
    } else if (format == "dot") {
      write_output(out, lattice_to_dot(lat));
    } else {
      write_output(out, lattice_to_json(lat));
    }
    json report = {{"command", "lattice"},
                   {"monoid_size", M.size},
                   {"side", side_str},
                   {"reduce_greens", reduce_greens},
                   {"lattice_size", lat.elements.size()},
                   {"wall_s", seconds_since(start)}};
    std::cerr << report.dump() << "\n";
    return 0;
  }

  int run_greens(MonoidSource const& src, std::string const& side_str,
                 std::string const& engine, std::string const& out) {
    auto start = Clock::now();
    auto M     = src.load();
    auto side  = parse_side(side_str);
    bool group = engine == "group";

    json          payload;
    RelClassIndex idx;
    if (side == Side::twosided) {
      idx = group ? relative_r_class_reps_group(M)
                  : relative_r_class_reps_scc(M);
      auto jreps = relative_j_class_reps(idx);
      payload["j_classes"] = jreps.size();
      payload["r_classes"] = idx.representatives.size();
      json reps            = json::array();
      for (auto const& [x, y] : jreps) {
        reps.push_back({x, y});
      }
      payload["representatives"] = std::move(reps);
    } else {
      idx = side == Side::right
                ? (group ? relative_r_class_reps_group(M)
                         : relative_r_class_reps_scc(M))
                : (group ? relative_l_class_reps_group(M)
                         : relative_l_class_reps_scc(M));
      payload["classes"] = idx.representatives.size();
      json reps          = json::array();
      for (auto const& [x, y] : idx.representatives) {
        reps.push_back({x, y});
      }
      payload["representatives"] = std::move(reps);
    }
    write_output(out, payload.dump());
    json report = {{"command", "greens"},
                   {"monoid_size", M.size},
                   {"side", side_str},
                   {"engine", engine},
                   {"wall_s", seconds_since(start)}};
    std::cerr << report.dump() << "\n";
    return 0;
  }

  int run_bench(std::string const& manifest_file, std::string const& out) {
    std::ifstream f(manifest_file);
    if (!f) {
      throw InputError("cannot open bench manifest: " + manifest_file);
    }
    json manifest;
    try {
      f >> manifest;
    } catch (json::parse_error const& e) {
      throw InputError(std::string("bad bench manifest: ") + e.what());
    }

    std::ostringstream csv;
    csv << "name,max_classes,side,threads,count,mean_s,sd_s\n";
    for (auto const& run : manifest.at("runs")) {
      auto name = run.at("name").get<std::string>();
      auto p    = parse_presentation_file(run.at("presentation"));
      SearchConfig cfg;
      cfg.max_classes = run.at("max_classes").get<uint32_t>();
      auto side       = run.value("side", std::string("right"));
      cfg.side        = parse_side(side) == Side::left
                            ? CongruenceSide::left
                            : CongruenceSide::right;
      cfg.semigroup_mode    = p.kind == PresentationKind::semigroup;
      auto reps             = run.value("repetitions", 1u);
      auto threads_list     = run.value("threads", std::vector<uint32_t>{1});
      for (auto threads : threads_list) {
        std::vector<double> times;
        uint64_t            count = 0;
        for (uint32_t r = 0; r < reps; ++r) {
          auto t0 = Clock::now();
          count   = threads <= 1 ? count_congruences(p, cfg)
                                 : parallel_count_congruences(p, cfg, threads);
          times.push_back(seconds_since(t0));
        }
        double mean = 0;
        for (auto t : times) {
          mean += t;
        }
        mean /= times.size();
        double var = 0;
        for (auto t : times) {
          var += (t - mean) * (t - mean);
        }
        double sd = times.size() > 1 ? std::sqrt(var / (times.size() - 1)) : 0;
        csv << name << ',' << cfg.max_classes << ',' << side << ','
            << threads << ',' << count << ',' << mean << ',' << sd << "\n";
      }
    }
    write_output(out, csv.str());
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-sided congruences of finitely presented monoids and "
               "congruence lattices of finite monoids"};
  app.require_subcommand(1);

  // enum
  EnumArgs enum_args;
  auto*    cmd_enum
      = app.add_subcommand("enum", "enumerate congruences by low index");
  cmd_enum->add_option("-p,--presentation", enum_args.presentation_file)
      ->required();
  cmd_enum->add_option("-n,--max-classes", enum_args.max_classes)->required();
  cmd_enum->add_option("--side", enum_args.side)
      ->check(CLI::IsMember({"right", "left"}));
  cmd_enum->add_flag("--semigroup", enum_args.semigroup);
  cmd_enum->add_option("--containing", enum_args.containing_file);
  cmd_enum->add_option("-t,--threads", enum_args.threads);
  cmd_enum->add_flag("--count-only", enum_args.count_only);
  cmd_enum->add_option("--out", enum_args.out);
  cmd_enum->add_option("--step-budget", enum_args.step_budget);
  cmd_enum->add_flag("--audit", enum_args.audit);

  // lattice
  MonoidSource lattice_src;
  std::string  lattice_side = "twosided", lattice_format = "json",
              lattice_out;
  bool lattice_reduce = false, lattice_count_only = false;
  auto* cmd_lattice = app.add_subcommand(
      "lattice", "congruence lattice of a finite monoid");
  lattice_src.add_options(cmd_lattice);
  cmd_lattice->add_option("--side", lattice_side)
      ->check(CLI::IsMember({"right", "left", "twosided"}));
  cmd_lattice->add_flag("--reduce-greens", lattice_reduce);
  cmd_lattice->add_option("--format", lattice_format)
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_lattice->add_flag("--count-only", lattice_count_only);
  cmd_lattice->add_option("--out", lattice_out);

  // greens
  MonoidSource greens_src;
  std::string  greens_side = "right", greens_engine = "scc", greens_out;
  auto*        cmd_greens = app.add_subcommand(
      "greens", "relative Green's class representatives of M x M");
  greens_src.add_options(cmd_greens);
  cmd_greens->add_option("--side", greens_side)
      ->check(CLI::IsMember({"right", "left", "twosided"}));
  cmd_greens->add_option("--engine", greens_engine)
      ->check(CLI::IsMember({"scc", "group"}));
  cmd_greens->add_option("--out", greens_out);

  // join / meet / standardize
  std::string gj0, gj1, gjp, gjo;
  auto* cmd_join = app.add_subcommand("join", "join of two word graphs");
  cmd_join->add_option("g0", gj0)->required();
  cmd_join->add_option("g1", gj1)->required();
  cmd_join->add_option("-p,--presentation", gjp);
  cmd_join->add_option("-o,--out", gjo);

  std::string gm0, gm1, gmp, gmo;
  auto* cmd_meet = app.add_subcommand("meet", "meet of two word graphs");
  cmd_meet->add_option("g0", gm0)->required();
  cmd_meet->add_option("g1", gm1)->required();
  cmd_meet->add_option("-p,--presentation", gmp);
  cmd_meet->add_option("-o,--out", gmo);

  std::string gs0, gso;
  auto*       cmd_std
      = app.add_subcommand("standardize", "standardize a word graph");
  cmd_std->add_option("g", gs0)->required();
  cmd_std->add_option("-o,--out", gso);

  // present
  MonoidSource present_src;
  std::string  present_out;
  auto*        cmd_present = app.add_subcommand(
      "present", "presentation of a finite monoid from its enumeration");
  present_src.add_options(cmd_present);
  cmd_present->add_option("-o,--out", present_out);

  // bench
  std::string bench_manifest, bench_out;
  auto* cmd_bench = app.add_subcommand("bench", "benchmark harness");
  cmd_bench->add_option("--manifest", bench_manifest)->required();
  cmd_bench->add_option("--out", bench_out);

  try {
    app.parse(argc, argv);

    if (*cmd_enum) {
      return run_enum(enum_args);
    }
    if (*cmd_lattice) {
      return run_lattice(lattice_src, lattice_side, lattice_reduce,
                         lattice_format, lattice_count_only, lattice_out);
    }
    if (*cmd_greens) {
      return run_greens(greens_src, greens_side, greens_engine, greens_out);
    }
    if (*cmd_join) {
      auto g0 = read_word_graph_file(gj0);
      auto g1 = read_word_graph_file(gj1);
      auto r  = gjp.empty()
                    ? join_word_graphs(g0, g1)
                    : join_word_graphs(g0, g1, parse_presentation_file(gjp));
      write_output(gjo, word_graph_to_json(r));
      return 0;
    }
    if (*cmd_meet) {
      auto g0 = read_word_graph_file(gm0);
      auto g1 = read_word_graph_file(gm1);
      if (!gmp.empty()) {
        auto p = parse_presentation_file(gmp);
        if (!is_compatible(g0, p) || !is_compatible(g1, p)) {
          throw InputError("input graph incompatible with the presentation");
        }
      }
      write_output(gmo, word_graph_to_json(meet_word_graphs(g0, g1)));
      return 0;
    }
    if (*cmd_std) {
      write_output(gso,
                   word_graph_to_json(standardize(read_word_graph_file(gs0))));
      return 0;
    }
    if (*cmd_present) {
      auto M = present_src.load();
      write_output(present_out, serialize_presentation(M.presentation));
      return 0;
    }
    if (*cmd_bench) {
      return run_bench(bench_manifest, bench_out);
    }
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (BudgetError const& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

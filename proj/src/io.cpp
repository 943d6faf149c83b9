#include "congkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace congkit {

  using nlohmann::json;

  std::string word_graph_to_json(WordGraph const& g) {
    json edges = json::array();
    for (auto const& e : g.edges()) {
      edges.push_back({e.source, e.label, e.target});
    }
    json out = {{"alphabet", g.alphabet_size()},
                {"nodes", g.number_of_nodes()},
                {"edges", std::move(edges)}};
    return out.dump();
  }

  WordGraph word_graph_from_json(std::string const& text) {
    json parsed;
    try {
      parsed = json::parse(text);
    } catch (json::parse_error const& e) {
      throw InputError(std::string("bad word graph JSON: ") + e.what());
    }
    if (!parsed.contains("alphabet") || !parsed.contains("nodes")
        || !parsed.contains("edges")) {
      throw InputError("word graph JSON needs alphabet, nodes and edges");
    }
    WordGraph g(parsed["alphabet"].get<uint32_t>(),
                parsed["nodes"].get<uint32_t>());
    for (auto const& e : parsed["edges"]) {
      if (!e.is_array() || e.size() != 3) {
        throw InputError("word graph edge must be [source, letter, target]");
      }
      g.add_edge(e[0].get<node_type>(), e[1].get<letter_type>(),
                 e[2].get<node_type>());
    }
    return g;
  }

  std::vector<WordGraph> read_jsonl(std::istream& in) {
    std::vector<WordGraph> out;
    std::string            line;
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      out.push_back(word_graph_from_json(line));
    }
    return out;
  }

  WordGraph read_word_graph_file(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      throw InputError("cannot open word graph file: " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return word_graph_from_json(ss.str());
  }

  namespace {
    template <typename T, typename ClassCount>
    std::string lattice_json(CongruenceLattice<T> const& lat,
                             ClassCount&&                classes) {
      json elements = json::array();
      for (auto const& e : lat.elements) {
        elements.push_back(classes(e));
      }
      json covers = json::array();
      for (auto const& [lo, hi] : lat.covers) {
        covers.push_back({lo, hi});
      }
      json out = {{"size", lat.elements.size()},
                  {"elements", std::move(elements)},
                  {"covers", std::move(covers)}};
      return out.dump();
    }

    template <typename T, typename ClassCount>
    std::string lattice_dot(CongruenceLattice<T> const& lat,
                            ClassCount&&                classes) {
      std::ostringstream out;
      out << "digraph lattice {\n  rankdir=BT;\n";
      for (size_t i = 0; i < lat.elements.size(); ++i) {
        out << "  n" << i << " [label=\"" << i << " ("
            << classes(lat.elements[i]) << " classes)\"];\n";
      }
      for (auto const& [lo, hi] : lat.covers) {
        out << "  n" << lo << " -> n" << hi << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }  // namespace

  std::string lattice_to_json(CongruenceLattice<WordGraph> const& lat) {
    return lattice_json(lat, [](WordGraph const& g) {
      return json::parse(word_graph_to_json(g));
    });
  }

  std::string
  lattice_to_json(CongruenceLattice<CongruencePartition> const& lat) {
    return lattice_json(
        lat, [](CongruencePartition const& p) { return json(p.class_of); });
  }

  std::string lattice_to_dot(CongruenceLattice<WordGraph> const& lat) {
    return lattice_dot(
        lat, [](WordGraph const& g) { return g.number_of_nodes(); });
  }

  std::string
  lattice_to_dot(CongruenceLattice<CongruencePartition> const& lat) {
    return lattice_dot(lat, [](CongruencePartition const& p) {
      return p.number_of_classes();
    });
  }

}  // namespace congkit

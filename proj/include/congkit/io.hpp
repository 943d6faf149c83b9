//
// Serialization: word graphs as JSON ({"alphabet": m, "nodes": n,
// "edges": [[src, letter, dst], ...]} with edges in stored order, one graph
// per line in JSONL streams), and lattices as JSON or DOT.

#ifndef CONGKIT_IO_HPP_
#define CONGKIT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "lattice_ops.hpp"
#include "word_graph.hpp"

namespace congkit {

  std::string word_graph_to_json(WordGraph const& g);
  WordGraph   word_graph_from_json(std::string const& text);

  std::vector<WordGraph> read_jsonl(std::istream& in);
  WordGraph              read_word_graph_file(std::string const& path);

  std::string lattice_to_json(CongruenceLattice<WordGraph> const& lat);
  std::string lattice_to_json(CongruenceLattice<CongruencePartition> const&);
  std::string lattice_to_dot(CongruenceLattice<WordGraph> const& lat);
  std::string lattice_to_dot(CongruenceLattice<CongruencePartition> const&);

}  // namespace congkit

#endif  // CONGKIT_IO_HPP_

#include "congkit/fixtures.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace congkit {

  namespace {
    // lines with comments stripped, keeping 1-based line numbers
    std::vector<std::pair<size_t, std::string>>
    content_lines(std::string const& path) {
      std::ifstream f(path);
      if (!f) {
        throw InputError("cannot open fixture file: " + path);
      }
      std::vector<std::pair<size_t, std::string>> out;
      std::string                                 line;
      size_t                                      no = 0;
      while (std::getline(f, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
          continue;
        }
        out.emplace_back(no, line);
      }
      return out;
    }

    std::vector<uint32_t> parse_ints(std::string const& line, size_t lineno) {
      std::istringstream    in(line);
      std::vector<uint32_t> out;
      long long             v;
      while (in >> v) {
        if (v < 0) {
          throw ParseError("negative value", lineno);
        }
        out.push_back(static_cast<uint32_t>(v));
      }
      if (!in.eof()) {
        throw ParseError("expected whitespace-separated integers", lineno);
      }
      return out;
    }
  }  // namespace

  std::vector<Transformation> read_transformations(std::string const& path) {
    std::vector<Transformation> out;
    for (auto const& [no, line] : content_lines(path)) {
      try {
        out.emplace_back(parse_ints(line, no));
      } catch (InputError const& e) {
        throw ParseError(e.what(), no);
      }
    }
    if (out.empty()) {
      throw InputError("no transformations in " + path);
    }
    return out;
  }

  std::vector<FpMatrix> read_matrices(std::string const& path) {
    auto lines = content_lines(path);
    if (lines.empty()) {
      throw InputError("empty matrix file: " + path);
    }
    auto header = parse_ints(lines[0].second, lines[0].first);
    if (header.size() != 2) {
      throw ParseError("matrix header must be 'p d'", lines[0].first);
    }
    auto p = header[0], d = header[1];
    std::vector<FpMatrix> out;
    size_t                i = 1;
    while (i < lines.size()) {
      std::vector<uint32_t> entries;
      for (uint32_t row = 0; row < d; ++row, ++i) {
        if (i >= lines.size()) {
          throw ParseError("incomplete matrix", lines.back().first);
        }
        auto vals = parse_ints(lines[i].second, lines[i].first);
        if (vals.size() != d) {
          throw ParseError("expected " + std::to_string(d) + " entries",
                           lines[i].first);
        }
        entries.insert(entries.end(), vals.begin(), vals.end());
      }
      try {
        out.emplace_back(p, d, std::move(entries));
      } catch (InputError const& e) {
        throw ParseError(e.what(), lines[i - 1].first);
      }
    }
    if (out.empty()) {
      throw InputError("no matrices in " + path);
    }
    return out;
  }

  std::vector<std::vector<uint32_t>> read_table(std::string const& path) {
    auto lines = content_lines(path);
    if (lines.empty()) {
      throw InputError("empty table file: " + path);
    }
    auto header = parse_ints(lines[0].second, lines[0].first);
    if (header.size() != 1) {
      throw ParseError("table header must be the element count", lines[0].first);
    }
    auto n = header[0];
    if (lines.size() != size_t(n) + 1) {
      throw InputError("table row count does not match the header in "
                       + path);
    }
    std::vector<std::vector<uint32_t>> table;
    for (uint32_t r = 0; r < n; ++r) {
      auto row = parse_ints(lines[r + 1].second, lines[r + 1].first);
      if (row.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " entries",
                         lines[r + 1].first);
      }
      table.push_back(std::move(row));
    }
    return table;
  }

  std::vector<std::pair<word_type, word_type>>
  read_pairs(std::string const& path, Presentation const& p) {
    std::vector<std::pair<word_type, word_type>> out;
    for (auto const& [no, line] : content_lines(path)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected 'u = v'", no);
      }
      auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string()
                                      : s.substr(b, e - b + 1);
      };
      try {
        out.emplace_back(word_from_string(p, strip(line.substr(0, eq))),
                         word_from_string(p, strip(line.substr(eq + 1))));
      } catch (InputError const& e) {
        throw ParseError(e.what(), no);
      }
    }
    return out;
  }

  namespace {
    Transformation map_one_point(uint32_t n, uint32_t from, uint32_t to) {
      std::vector<uint32_t> img(n);
      std::iota(img.begin(), img.end(), 0);
      img[from] = to;
      return Transformation(img);
    }
  }  // namespace

  std::vector<Transformation> catalan_generators(uint32_t n) {
    if (n < 1) {
      throw InputError("degree must be positive");
    }
    std::vector<Transformation> gens;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      gens.push_back(map_one_point(n, i + 1, i));
    }
    if (gens.empty()) {
      gens.push_back(Transformation::identity(n));
    }
    return gens;
  }

  std::vector<Transformation> order_preserving_generators(uint32_t n) {
    if (n < 1) {
      throw InputError("degree must be positive");
    }
    std::vector<Transformation> gens;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      gens.push_back(map_one_point(n, i + 1, i));
      gens.push_back(map_one_point(n, i, i + 1));
    }
    if (gens.empty()) {
      gens.push_back(Transformation::identity(n));
    }
    return gens;
  }

  std::vector<Transformation> symmetric_group_generators(uint32_t n) {
    if (n < 1) {
      throw InputError("degree must be positive");
    }
    std::vector<uint32_t> cycle(n), swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    for (uint32_t i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
    }
    if (n >= 2) {
      std::swap(swap01[0], swap01[1]);
    }
    return {Transformation(cycle), Transformation(swap01)};
  }

  std::vector<Transformation> full_transformation_generators(uint32_t n) {
    auto gens = symmetric_group_generators(n);
    if (n >= 2) {
      gens.push_back(map_one_point(n, n - 1, 0));
    }
    return gens;
  }

  std::vector<Transformation> symmetric_inverse_generators(uint32_t n) {
    // degree n + 1; the last point is the absorbing undefined value
    auto degree = n + 1;
    std::vector<Transformation> gens;
    for (auto const& g : symmetric_group_generators(n)) {
      auto img = g.images();
      img.push_back(n);
      gens.emplace_back(std::move(img));
    }
    // partial identity on {0, .., n-2}: n-1 undefined
    if (n >= 1) {
      gens.push_back(map_one_point(degree, n - 1, n));
    }
    return gens;
  }

  std::vector<Transformation>
  partial_transformation_generators(uint32_t n) {
    auto gens = symmetric_inverse_generators(n);
    if (n >= 2) {
      // a non-injective total map completes the generating set
      auto img = Transformation::identity(n + 1).images();
      img[n - 1] = 0;
      gens.emplace_back(std::move(img));
    }
    return gens;
  }

  std::vector<FpMatrix> gl3_f2_generators() {
    return {
        FpMatrix(2, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}),  // 3-cycle of basis
        FpMatrix(2, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}),  // transvection
        FpMatrix(2, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0}),  // rank-2 idempotent
    };
  }

  std::vector<FpMatrix> f7_det01_generators() {
    return {
        FpMatrix(7, 2, {1, 1, 0, 1}),  // det 1
        FpMatrix(7, 2, {0, 1, 6, 0}),  // det 1
        FpMatrix(7, 2, {1, 0, 0, 0}),  // rank-1 idempotent, det 0
    };
  }

}  // namespace congkit

//
// congkit - enumeration of one-sided congruences of finitely presented
// monoids, and congruence lattices of finite monoids.
//
// Basic types shared across the library.

#ifndef CONGKIT_TYPES_HPP_
#define CONGKIT_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace congkit {

  using letter_type = uint32_t;
  using node_type   = uint32_t;

  //! A word is a sequence of 0-based letter indices; the empty vector is
  //! the empty word.
  using word_type = std::vector<letter_type>;

  //! Value used for unset targets in word graphs and tables.
  constexpr uint32_t UNDEFINED = std::numeric_limits<uint32_t>::max();

  enum class Side { right, left, twosided };

  //! Thrown when an argument violates a documented precondition.
  struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown by the text-format parsers; carries a 1-based line number.
  struct ParseError : std::runtime_error {
    ParseError(std::string const& msg, size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_number(line) {}
    size_t line_number;
  };

  //! Thrown when a step or size budget is exhausted.
  struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

}  // namespace congkit

#endif  // CONGKIT_TYPES_HPP_

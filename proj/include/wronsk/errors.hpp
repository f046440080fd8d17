#ifndef WRONSK_ERRORS_HPP
#define WRONSK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wronsk {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown built-in potential name.
class CatalogError : public Error {
public:
  using Error::Error;
};

/// Missing or invalid potential parameter.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Expression syntax error; position() is the byte offset into the source.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Potential evaluates to a non-finite value at a probe point.
class IllPosedError : public Error {
public:
  using Error::Error;
};

/// Potential never settles to its asymptotic limit within the search window.
class TailError : public Error {
public:
  using Error::Error;
};

/// Integration state became non-finite or exceeded the overflow guard.
/// node() is the coordinate of the offending grid node.
class OverflowError : public Error {
public:
  OverflowError(const std::string& what, double node)
      : Error(what + " (node x = " + std::to_string(node) + ")"), node_(node) {}
  double node() const { return node_; }

private:
  double node_;
};

/// Energy above the asymptotic limit: no convergent/divergent split exists.
class ContinuumError : public Error {
public:
  using Error::Error;
};

/// Coordinate outside the integration grid.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Root refinement called without a sign change.
class BracketError : public Error {
public:
  using Error::Error;
};

/// Root refinement ran out of iterations; carries the best bracket found.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  double bracket_lo() const { return lo_; }
  double bracket_hi() const { return hi_; }

private:
  double lo_, hi_;
};

/// Diagnostic not defined in the requested regime (e.g. B3 at threshold).
class DiagnosticError : public Error {
public:
  using Error::Error;
};

/// Degenerate user input, e.g. the (0, 0) wavefunction mixture.
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

}  // namespace wronsk

#endif

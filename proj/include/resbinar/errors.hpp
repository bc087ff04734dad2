#pragma once

// Exception types shared across the library.

#include <stdexcept>
#include <string>

namespace resbinar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- lattice construction ---

struct LatticeError : Error {
  using Error::Error;
};

struct DuplicateLabel : LatticeError {
  explicit DuplicateLabel(const std::string& label)
      : LatticeError("duplicate element label: " + label), label(label) {}
  std::string label;
};

struct UnknownLabel : LatticeError {
  explicit UnknownLabel(const std::string& label)
      : LatticeError("unknown element label: " + label), label(label) {}
  std::string label;
};

struct CyclicCovers : LatticeError {
  CyclicCovers() : LatticeError("cover relation contains a cycle") {}
};

struct NotALattice : LatticeError {
  NotALattice(const std::string& what, int x, int y)
      : LatticeError(what), x(x), y(y) {}
  int x, y;  // offending pair
};

// --- algebra construction ---

enum class Side { Left, Right };

struct NotResiduated : Error {
  NotResiduated(const std::string& what, int x, int z, Side side)
      : Error(what), x(x), z(z), side(side) {}
  int x, z;
  Side side;
};

struct NoUnit : Error {
  NoUnit() : Error("algebra has no unit element") {}
};

struct UnitMismatch : Error {
  explicit UnitMismatch(const std::string& what) : Error(what) {}
};

// --- term language ---

struct ParseError : Error {
  enum class Kind { Syntax, AdjacentOperators, UnbalancedParens };
  ParseError(Kind kind, std::size_t pos, const std::string& what)
      : Error(what + " (at offset " + std::to_string(pos) + ")"),
        kind(kind),
        pos(pos) {}
  Kind kind;
  std::size_t pos;
};

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable: " + name), name(name) {}
  std::string name;
};

// --- law catalog ---

struct UnsupportedLaw : Error {
  using Error::Error;
};

struct AlwaysValidLawFailed : Error {
  using Error::Error;
};

// --- frames ---

struct NotDistributive : Error {
  NotDistributive() : Error("lattice reduct is not distributive") {}
};

struct MonotonicityViolation : Error {
  using Error::Error;
};

// --- search / poset ---

struct ConfigError : Error {
  using Error::Error;
};

struct SeparationGap : Error {
  using Error::Error;
};

// --- file format ---

struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace resbinar

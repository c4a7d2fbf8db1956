#pragma once

#include <stdexcept>
#include <string>

namespace pgamesh {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate geometric input: null versor, ideal element where a finite one
/// is required, plane with zero normal, and the like.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid mesh data (indices out of range, repeated indices
/// within a face).
class MeshError : public Error {
 public:
  using Error::Error;
};

/// File-format error. `line` is 1-based for text formats and 0 for binary.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_number)
      : Error(what + (line_number > 0 ? " (line " + std::to_string(line_number) + ")" : "")),
        line(line_number) {}
  int line;
};

}  // namespace pgamesh

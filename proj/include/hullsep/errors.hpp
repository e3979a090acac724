#pragma once

#include <stdexcept>
#include <string>

namespace hullsep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Duality of a vertical line (b == 0) is undefined.
struct VerticalLineError : Error {
  using Error::Error;
};

// cost_of_line requires that no input point lies on the queried line.
struct PointOnLineError : Error {
  using Error::Error;
};

// Subset oracle refuses instances above its size cap.
struct InstanceTooLargeError : Error {
  using Error::Error;
};

// Weight propagation found a cell whose weights depend on the BFS path;
// indicates a broken arrangement.
struct InconsistentArrangementError : Error {
  using Error::Error;
};

struct InvalidParamsError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

}  // namespace hullsep

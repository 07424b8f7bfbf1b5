#pragma once

#include <stdexcept>
#include <string>

namespace gpcx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input text could not be read as a presentation or word
struct ParseError : Error {
  int line;  // 1-based line in the source text, 0 if not line-oriented
  ParseError(int line_, const std::string& msg)
      : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// a Letter references a generator the graph does not have, or an
// inverse sign on an involution
struct InvalidLetter : Error {
  using Error::Error;
};

// operands built over different presentation graphs
struct GraphMismatch : Error {
  using Error::Error;
};

struct NotGeodesic : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// an enumeration outgrew its configured cap
struct ResourceLimit : Error {
  using Error::Error;
};

struct HorizonTooSmall : Error {
  using Error::Error;
};

struct HorizonExceeded : Error {
  using Error::Error;
};

struct RaysIndistinguishable : Error {
  using Error::Error;
};

}  // namespace gpcx

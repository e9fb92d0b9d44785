#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace whittaker {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedType : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

std::string format_coords(const std::vector<int>& beta);

// A vertex or edge weight vanished under specialization.
struct SingularWeight : Error {
  explicit SingularWeight(std::vector<int> b)
      : Error("singular weight at beta=" + format_coords(b)), beta(std::move(b)) {}
  std::vector<int> beta;
};

// Affine weight on the delta diagonal vanished at eps = 0.
struct CriticalSingularity : Error {
  explicit CriticalSingularity(std::vector<int> b)
      : Error("critical singularity at beta=" + format_coords(b) +
              " (use the critical solver)"),
        beta(std::move(b)) {}
  std::vector<int> beta;
};

}  // namespace whittaker

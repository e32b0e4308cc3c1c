#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// n has no representation as a sum of two squares.
struct NotSumOfTwoSquares : std::domain_error {
  explicit NotSumOfTwoSquares(const std::string& what) : std::domain_error(what) {}
};

// Grid resolution below the 4*sqrt(n) guard.
struct GridTooCoarse : std::invalid_argument {
  explicit GridTooCoarse(const std::string& what) : std::invalid_argument(what) {}
};

// A bracketing or iteration scheme failed to converge inside its envelope.
struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nodal

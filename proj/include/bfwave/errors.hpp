#pragma once

#include <stdexcept>
#include <string>

namespace bfwave {

// Root-finding bracket does not straddle a sign change.
struct BracketError : std::runtime_error {
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Input parameters lie outside the regime where the requested quantity
// is defined (e.g. modulationally stable depth asked for a band width).
struct RegimeError : std::runtime_error {
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// An iteration failed to converge within its budget.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A spectral projector did not have the expected rank.
struct RankError : std::runtime_error {
  explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

// Eigenvalue clustering is ambiguous; the near-zero quadruple cannot be
// separated from the rest of the spectrum.
struct ClusterError : std::runtime_error {
  explicit ClusterError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bfwave

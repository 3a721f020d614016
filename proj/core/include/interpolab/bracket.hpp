#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <string>

namespace interpolab {

// Replayable payload behind an optimized bound. The column layout is owned
// by the producing solver: a split for the K-functional, Laurent
// coefficients for the complex-method norm, a representation for the Peetre
// norm, a maximizer for operator norms.
struct Witness {
  std::string kind;
  Eigen::MatrixXcd payload;
  std::map<std::string, double> params;
};

// Uniform return type for optimized norms: a certified (lower, upper) pair
// with solver metadata. upper is always the value of the retained witness;
// lower comes from an independent certificate (dual point, oracle, envelope).
struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  long iterations = 0;
  bool converged = true;
  std::string solver;
  Witness witness;

  double gap() const { return upper - lower; }
  double relative_gap() const {
    const double scale = upper > 0 ? upper : 1.0;
    return gap() / scale;
  }
};

struct SolverConfig {
  int multistarts = 8;
  int max_iterations = 400;
  // stop when the best value improved by less than relative_tolerance over
  // the trailing improvement_window iterations
  int improvement_window = 200;
  double relative_tolerance = 1e-7;
  double step_scale = 0.5;
  std::uint64_t seed = 0x1d872b41ULL;
};

}  // namespace interpolab

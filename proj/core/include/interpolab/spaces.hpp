#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "interpolab/bracket.hpp"

namespace interpolab {

// Exponent value used for the max norm. p = infinity is an exact enum-like
// value, never a large float.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Complex pairing used throughout: <x, y> = sum_i x_i conj(y_i).
double real_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

enum class NormKind { WeightedLp, Polytope };

// A concrete norm on C^n, the atom of all spaces.
//
// WeightedLp: ||x|| = (sum_i (w_i |x_i|)^p)^(1/p), max_i w_i |x_i| for p = inf.
// Polytope:   ||x|| = max_j |<x, a_j>| for a finite spanning list of
//             functionals a_j (stored explicitly, never inverted).
class NormModel {
 public:
  static NormModel weighted_lp(double p, Eigen::VectorXd weights);
  // rows of `functionals` are the a_j
  static NormModel polytope(Eigen::MatrixXcd functionals);

  NormKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_weighted_lp() const { return kind_ == NormKind::WeightedLp; }

  double exponent() const;                       // WeightedLp only
  const Eigen::VectorXd& weights() const;        // WeightedLp only
  const Eigen::MatrixXcd& functionals() const;   // Polytope only

  double norm(const Eigen::VectorXcd& x) const;

  // A norming functional at x: g with dual norm <= 1 and Re<x, g> = ||x||.
  // Doubles as a subgradient of the norm in realified coordinates.
  Eigen::VectorXcd norming_functional(const Eigen::VectorXcd& x) const;

  // Exact dual norm for WeightedLp; for Polytope a certified upper bound
  // obtained from the euclidean envelope.
  double dual_norm_upper(const Eigen::VectorXcd& y) const;

  // (alpha, beta) with alpha ||x||_2 <= ||x|| <= beta ||x||_2 for all x.
  std::pair<double, double> euclidean_envelope() const;

  bool same_parameters(const NormModel& other, double tol = 0.0) const;

 private:
  NormModel() = default;
  NormKind kind_ = NormKind::WeightedLp;
  int dim_ = 0;
  double p_ = 2.0;
  Eigen::VectorXd weights_;
  Eigen::MatrixXcd functionals_;
};

// Two norms on the same C^n. In finite dimensions X0 cap X1 = X0 + X1 = C^n,
// so every couple is regular and the endpoint spaces [X0,X1]_j are X_j
// themselves.
class Couple {
 public:
  Couple(NormModel space0, NormModel space1);

  const NormModel& space0() const { return space0_; }
  const NormModel& space1() const { return space1_; }
  const NormModel& space(int j) const { return j == 0 ? space0_ : space1_; }
  int dim() const { return space0_.dim(); }
  bool is_lattice() const {
    return space0_.is_weighted_lp() && space1_.is_weighted_lp();
  }

 private:
  NormModel space0_;
  NormModel space1_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  int dim_min = 2;
  int dim_max = 6;
  std::vector<double> p_values = {1.0, 1.5, 2.0, 4.0, kInf};
  double log_weight_min = -1.2;
  double log_weight_max = 1.2;
  // when > 0, each space is drawn as a polytope with this probability;
  // functional count is uniform in [dim, 2*dim]
  double polytope_probability = 0.0;

  void validate() const;
};

// Dual of a WeightedLp space under <x,y> = sum x_i conj(y_i): exponent p'
// with 1/p + 1/p' = 1 and weights 1/w_i. Polytope duals are out of scope and
// throw.
NormModel dual_space(const NormModel& space);

// max(||x||_X0, ||x||_X1)
double intersection_norm(const Couple& couple, const Eigen::VectorXcd& x);

// inf{||x0||_X0 + ||x1||_X1 : x0 + x1 = x}, the K-functional at t = 1,
// computed by the shared convex split solver. The bracket's upper value is
// the norm; the lower bound comes from a dual-feasible certificate.
NormBracket sum_norm(const Couple& couple, const Eigen::VectorXcd& x,
                     const SolverConfig& cfg = {});

Couple random_couple(const GenConfig& cfg);
Eigen::VectorXcd random_vector(std::uint64_t seed, int n);

}  // namespace interpolab

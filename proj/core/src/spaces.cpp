#include "interpolab/spaces.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "interpolab/rng.hpp"

namespace interpolab {

namespace {

std::complex<double> phase_of(std::complex<double> v) {
  const double m = std::abs(v);
  return m == 0.0 ? std::complex<double>(0.0, 0.0) : v / m;
}

void check_dim(const NormModel& s, const Eigen::VectorXcd& x) {
  if (x.size() != s.dim())
    throw std::invalid_argument("norm: vector dimension does not match space");
}

}  // namespace

double real_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  return x.dot(y).real() == 0.0 && x.size() == 0 ? 0.0 : (y.dot(x)).real();
}

NormModel NormModel::weighted_lp(double p, Eigen::VectorXd weights) {
  if (weights.size() < 1) throw std::invalid_argument("NormModel: dim must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("NormModel: exponent must satisfy p >= 1");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
      throw std::invalid_argument("NormModel: weights must be strictly positive and finite");
  }
  NormModel m;
  m.kind_ = NormKind::WeightedLp;
  m.dim_ = static_cast<int>(weights.size());
  m.p_ = p;
  m.weights_ = std::move(weights);
  return m;
}

NormModel NormModel::polytope(Eigen::MatrixXcd functionals) {
  const Eigen::Index rows = functionals.rows();
  const Eigen::Index cols = functionals.cols();
  if (cols < 1 || rows < cols)
    throw std::invalid_argument("NormModel: polytope needs at least dim functionals");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(functionals);
  const auto& sv = svd.singularValues();
  if (sv[cols - 1] <= 1e-12 * sv[0])
    throw std::invalid_argument("NormModel: polytope functionals must span C^n");
  NormModel m;
  m.kind_ = NormKind::Polytope;
  m.dim_ = static_cast<int>(cols);
  m.functionals_ = std::move(functionals);
  return m;
}

double NormModel::exponent() const {
  if (kind_ != NormKind::WeightedLp)
    throw std::logic_error("NormModel: exponent() on polytope kind");
  return p_;
}

const Eigen::VectorXd& NormModel::weights() const {
  if (kind_ != NormKind::WeightedLp)
    throw std::logic_error("NormModel: weights() on polytope kind");
  return weights_;
}

const Eigen::MatrixXcd& NormModel::functionals() const {
  if (kind_ != NormKind::Polytope)
    throw std::logic_error("NormModel: functionals() on weighted-lp kind");
  return functionals_;
}

double NormModel::norm(const Eigen::VectorXcd& x) const {
  check_dim(*this, x);
  if (kind_ == NormKind::WeightedLp) {
    if (p_ == kInf) {
      double m = 0.0;
      for (int i = 0; i < dim_; ++i) m = std::max(m, weights_[i] * std::abs(x[i]));
      return m;
    }
    if (p_ == 1.0) {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += weights_[i] * std::abs(x[i]);
      return s;
    }
    if (p_ == 2.0) {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double t = weights_[i] * std::abs(x[i]);
        s += t * t;
      }
      return std::sqrt(s);
    }
    // generic p: scale by the max term to avoid overflow for large p
    double m = 0.0;
    for (int i = 0; i < dim_; ++i) m = std::max(m, weights_[i] * std::abs(x[i]));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::pow(weights_[i] * std::abs(x[i]) / m, p_);
    return m * std::pow(s, 1.0 / p_);
  }
  double m = 0.0;
  for (Eigen::Index j = 0; j < functionals_.rows(); ++j) {
    std::complex<double> v = 0.0;
    for (int i = 0; i < dim_; ++i) v += x[i] * std::conj(functionals_(j, i));
    m = std::max(m, std::abs(v));
  }
  return m;
}

Eigen::VectorXcd NormModel::norming_functional(const Eigen::VectorXcd& x) const {
  check_dim(*this, x);
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(dim_);
  const double nx = norm(x);
  if (nx == 0.0) return g;

  if (kind_ == NormKind::Polytope) {
    int best = 0;
    double bestval = -1.0;
    std::complex<double> bestpair = 0.0;
    for (Eigen::Index j = 0; j < functionals_.rows(); ++j) {
      std::complex<double> v = 0.0;
      for (int i = 0; i < dim_; ++i) v += x[i] * std::conj(functionals_(j, i));
      if (std::abs(v) > bestval) {
        bestval = std::abs(v);
        best = static_cast<int>(j);
        bestpair = v;
      }
    }
    const std::complex<double> ph = phase_of(bestpair);
    for (int i = 0; i < dim_; ++i) g[i] = ph * functionals_(best, i);
    return g;
  }

  if (p_ == kInf) {
    int best = 0;
    double bestval = -1.0;
    for (int i = 0; i < dim_; ++i) {
      const double t = weights_[i] * std::abs(x[i]);
      if (t > bestval) {
        bestval = t;
        best = i;
      }
    }
    g[best] = weights_[best] * phase_of(x[best]);
    return g;
  }
  if (p_ == 1.0) {
    for (int i = 0; i < dim_; ++i) g[i] = weights_[i] * phase_of(x[i]);
    return g;
  }
  for (int i = 0; i < dim_; ++i) {
    const double wi = weights_[i];
    const double t = wi * std::abs(x[i]);
    if (t == 0.0) continue;
    g[i] = std::pow(t / nx, p_ - 1.0) * wi * phase_of(x[i]);
  }
  return g;
}

double NormModel::dual_norm_upper(const Eigen::VectorXcd& y) const {
  check_dim(*this, y);
  if (kind_ == NormKind::WeightedLp) return dual_space(*this).norm(y);
  const double alpha = euclidean_envelope().first;
  return y.norm() / alpha;
}

std::pair<double, double> NormModel::euclidean_envelope() const {
  if (kind_ == NormKind::WeightedLp) {
    const double wmin = weights_.minCoeff();
    const double wmax = weights_.maxCoeff();
    const double n = static_cast<double>(dim_);
    if (p_ == kInf) return {wmin / std::sqrt(n), wmax};
    if (p_ >= 2.0) return {wmin * std::pow(n, 1.0 / p_ - 0.5), wmax};
    return {wmin, wmax * std::pow(n, 1.0 / p_ - 0.5)};
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(functionals_);
  const auto& sv = svd.singularValues();
  const double m = static_cast<double>(functionals_.rows());
  double beta = 0.0;
  for (Eigen::Index j = 0; j < functionals_.rows(); ++j)
    beta = std::max(beta, functionals_.row(j).norm());
  return {sv[functionals_.cols() - 1] / std::sqrt(m), beta};
}

bool NormModel::same_parameters(const NormModel& other, double tol) const {
  if (kind_ != other.kind_ || dim_ != other.dim_) return false;
  if (kind_ == NormKind::WeightedLp) {
    if (p_ == kInf || other.p_ == kInf) {
      if (p_ != other.p_) return false;
    } else if (std::abs(p_ - other.p_) > tol * std::max(1.0, std::abs(p_))) {
      return false;
    }
    for (int i = 0; i < dim_; ++i) {
      if (std::abs(weights_[i] - other.weights_[i]) > tol * std::abs(weights_[i]))
        return false;
    }
    return true;
  }
  if (functionals_.rows() != other.functionals_.rows()) return false;
  return (functionals_ - other.functionals_).norm() <= tol * functionals_.norm();
}

Couple::Couple(NormModel space0, NormModel space1)
    : space0_(std::move(space0)), space1_(std::move(space1)) {
  if (space0_.dim() != space1_.dim())
    throw std::invalid_argument("Couple: endpoint dimensions differ");
}

void GenConfig::validate() const {
  if (dim_min < 1 || dim_max < dim_min)
    throw std::invalid_argument("GenConfig: bad dimension range");
  if (p_values.empty()) throw std::invalid_argument("GenConfig: empty p list");
  for (double p : p_values)
    if (!(p >= 1.0)) throw std::invalid_argument("GenConfig: p < 1");
  if (!(log_weight_max >= log_weight_min))
    throw std::invalid_argument("GenConfig: bad weight log-range");
  if (polytope_probability < 0.0 || polytope_probability > 1.0)
    throw std::invalid_argument("GenConfig: bad polytope probability");
}

NormModel dual_space(const NormModel& space) {
  if (!space.is_weighted_lp())
    throw std::invalid_argument("dual_space: polytope duals are unsupported");
  const double p = space.exponent();
  double q;
  if (p == kInf) {
    q = 1.0;
  } else if (p == 1.0) {
    q = kInf;
  } else {
    q = p / (p - 1.0);
  }
  return NormModel::weighted_lp(q, space.weights().cwiseInverse());
}

double intersection_norm(const Couple& couple, const Eigen::VectorXcd& x) {
  return std::max(couple.space0().norm(x), couple.space1().norm(x));
}

namespace {

NormModel random_space(SplitMix64& rng, const GenConfig& cfg, int n) {
  const bool polytope = cfg.polytope_probability > 0.0 &&
                        rng.next_double() < cfg.polytope_probability;
  if (polytope) {
    const int m = static_cast<int>(rng.uniform_int(n, 2 * n));
    for (int attempt = 0; attempt < 16; ++attempt) {
      Eigen::MatrixXcd f(m, n);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) f(j, i) = rng.complex_normal();
      try {
        return NormModel::polytope(std::move(f));
      } catch (const std::invalid_argument&) {
        // rank-deficient draw, retry
      }
    }
    throw std::runtime_error("random_space: could not draw a spanning polytope");
  }
  const double p =
      cfg.p_values[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cfg.p_values.size()) - 1))];
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i)
    w[i] = std::exp(rng.uniform(cfg.log_weight_min, cfg.log_weight_max));
  return NormModel::weighted_lp(p, std::move(w));
}

}  // namespace

Couple random_couple(const GenConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  const int n = static_cast<int>(rng.uniform_int(cfg.dim_min, cfg.dim_max));
  NormModel s0 = random_space(rng, cfg, n);
  NormModel s1 = random_space(rng, cfg, n);
  return Couple(std::move(s0), std::move(s1));
}

Eigen::VectorXcd random_vector(std::uint64_t seed, int n) {
  SplitMix64 rng(seed);
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.complex_normal();
  return x;
}

}  // namespace interpolab

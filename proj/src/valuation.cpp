#include "royaltylab/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "royaltylab/numerics.hpp"

namespace royaltylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_nonneg(double v, const char* what) {
  if (!(v >= 0.0)) {
    throw std::domain_error(std::string(what) +
                            ": argument must be nonnegative");
  }
}

}  // namespace

ValuationDistribution ValuationDistribution::two_point(double v_low,
                                                       double v_high,
                                                       double p_high) {
  require(v_low > 0.0, "two_point: v_low must be > 0");
  require(v_high > v_low, "two_point: v_high must be > v_low");
  require(p_high > 0.0 && p_high < 1.0, "two_point: p_high must be in (0,1)");
  ValuationDistribution d;
  d.kind_ = DistKind::TwoPoint;
  d.a_ = v_low;
  d.b_ = v_high;
  d.c_ = p_high;
  d.atoms_ = {{v_low, 1.0 - p_high}, {v_high, p_high}};
  d.mean_ = v_low * (1.0 - p_high) + v_high * p_high;
  d.variance_ = (v_low - d.mean_) * (v_low - d.mean_) * (1.0 - p_high) +
                (v_high - d.mean_) * (v_high - d.mean_) * p_high;
  // min of two draws is v_high only when both land high; max is v_low only
  // when both land low.
  d.order_min_ = v_low * (1.0 - p_high * p_high) + v_high * p_high * p_high;
  double p_low = 1.0 - p_high;
  d.order_max_ = v_low * p_low * p_low + v_high * (1.0 - p_low * p_low);
  return d;
}

ValuationDistribution ValuationDistribution::uniform(double lo, double hi) {
  require(lo >= 0.0, "uniform: lo must be >= 0");
  require(hi > lo, "uniform: hi must be > lo");
  ValuationDistribution d;
  d.kind_ = DistKind::Uniform;
  d.a_ = lo;
  d.b_ = hi;
  d.mean_ = 0.5 * (lo + hi);
  d.variance_ = (hi - lo) * (hi - lo) / 12.0;
  d.order_min_ = lo + (hi - lo) / 3.0;
  d.order_max_ = lo + 2.0 * (hi - lo) / 3.0;
  return d;
}

ValuationDistribution ValuationDistribution::exponential(double lambda) {
  require(lambda > 0.0, "exponential: lambda must be > 0");
  ValuationDistribution d;
  d.kind_ = DistKind::Exponential;
  d.a_ = lambda;
  d.mean_ = 1.0 / lambda;
  d.variance_ = 1.0 / (lambda * lambda);
  d.order_min_ = 0.5 / lambda;   // min of two exponentials ~ Exp(2 lambda)
  d.order_max_ = 1.5 / lambda;   // 2 E[V] - E[min]
  return d;
}

ValuationDistribution ValuationDistribution::normal_nonneg(double mu,
                                                           double sigma) {
  require(sigma > 0.0, "normal_nonneg: sigma must be > 0");
  ValuationDistribution d;
  d.kind_ = DistKind::NormalNonNeg;
  d.a_ = mu;
  d.b_ = sigma;
  double alpha = -mu / sigma;  // truncation point in standard units
  double z = numerics::normal_cdf_upper(alpha);
  require(z > 0.0, "normal_nonneg: truncated mass underflows to zero");
  d.trunc_norm_z_ = z;
  double hazard = numerics::normal_pdf(alpha) / z;
  d.mean_ = mu + sigma * hazard;
  d.variance_ =
      sigma * sigma * (1.0 + alpha * hazard - hazard * hazard);
  // No closed form for the truncated-normal order statistics; both are
  // integrated independently so the pairing identity stays a real check.
  double hi = std::max(0.0, mu) + 45.0 * sigma;
  auto pdf = [&](double v) {
    return numerics::normal_pdf((v - mu) / sigma) / (sigma * z);
  };
  auto cdf = [&](double v) {
    return (numerics::normal_cdf((v - mu) / sigma) -
            numerics::normal_cdf(alpha)) /
           z;
  };
  d.order_min_ = numerics::integrate(
      [&](double v) { return 2.0 * v * (1.0 - cdf(v)) * pdf(v); }, 0.0, hi,
      1e-12);
  d.order_max_ = numerics::integrate(
      [&](double v) { return 2.0 * v * cdf(v) * pdf(v); }, 0.0, hi, 1e-12);
  return d;
}

double ValuationDistribution::stddev() const { return std::sqrt(variance_); }

double ValuationDistribution::pdf(double v) const {
  check_nonneg(v, "pdf");
  switch (kind_) {
    case DistKind::TwoPoint:
      throw std::domain_error(
          "pdf: two-point distribution has point masses, not a density; "
          "use atoms()");
    case DistKind::Uniform:
      return (v >= a_ && v <= b_) ? 1.0 / (b_ - a_) : 0.0;
    case DistKind::Exponential:
      return a_ * std::exp(-a_ * v);
    case DistKind::NormalNonNeg:
      return numerics::normal_pdf((v - a_) / b_) / (b_ * trunc_norm_z_);
  }
  return 0.0;
}

double ValuationDistribution::cdf(double v) const {
  if (v < 0.0) return 0.0;
  switch (kind_) {
    case DistKind::TwoPoint: {
      double acc = 0.0;
      for (const Atom& atom : atoms_) {
        if (atom.value <= v) acc += atom.mass;
      }
      return acc;
    }
    case DistKind::Uniform:
      if (v <= a_) return 0.0;
      if (v >= b_) return 1.0;
      return (v - a_) / (b_ - a_);
    case DistKind::Exponential:
      return -std::expm1(-a_ * v);
    case DistKind::NormalNonNeg: {
      if (v == kInf) return 1.0;
      double lo = numerics::normal_cdf(-a_ / b_);
      return std::min(
          1.0, (numerics::normal_cdf((v - a_) / b_) - lo) / trunc_norm_z_);
    }
  }
  return 0.0;
}

double ValuationDistribution::survival(double v) const {
  check_nonneg(v, "survival");
  switch (kind_) {
    case DistKind::TwoPoint: {
      double acc = 0.0;
      for (const Atom& atom : atoms_) {
        if (atom.value >= v) acc += atom.mass;
      }
      return acc;
    }
    case DistKind::Uniform:
      if (v <= a_) return 1.0;
      if (v >= b_) return 0.0;
      return (b_ - v) / (b_ - a_);
    case DistKind::Exponential:
      return std::exp(-a_ * v);
    case DistKind::NormalNonNeg:
      if (v == kInf) return 0.0;
      return numerics::normal_cdf_upper((v - a_) / b_) / trunc_norm_z_;
  }
  return 0.0;
}

double ValuationDistribution::tail_expectation(double t) const {
  check_nonneg(t, "tail_expectation");
  if (t == kInf) return 0.0;
  switch (kind_) {
    case DistKind::TwoPoint: {
      double acc = 0.0;
      for (const Atom& atom : atoms_) {
        if (atom.value >= t) acc += atom.value * atom.mass;
      }
      return acc;
    }
    case DistKind::Uniform: {
      double lo = std::max(t, a_);
      if (lo >= b_) return 0.0;
      return (b_ * b_ - lo * lo) / (2.0 * (b_ - a_));
    }
    case DistKind::Exponential:
      return (t + 1.0 / a_) * std::exp(-a_ * t);
    case DistKind::NormalNonNeg: {
      double beta = (t - a_) / b_;
      return (a_ * numerics::normal_cdf_upper(beta) +
              b_ * numerics::normal_pdf(beta)) /
             trunc_norm_z_;
    }
  }
  return 0.0;
}

double ValuationDistribution::conditional_mean_above(double t) const {
  double s = survival(t);
  if (!(s > 0.0)) {
    throw std::domain_error(
        "conditional_mean_above: conditioning event has probability zero");
  }
  return tail_expectation(t) / s;
}

double ValuationDistribution::order_stat_mean(int k, int n) const {
  if (n != 2) {
    throw std::invalid_argument("order_stat_mean: only n = 2 is supported");
  }
  if (k != 1 && k != 2) {
    throw std::invalid_argument("order_stat_mean: k must be 1 or 2");
  }
  return k == 1 ? order_min_ : order_max_;
}

double ValuationDistribution::quantile(double q) const {
  if (!(q >= 0.0 && q < 1.0)) {
    throw std::domain_error("quantile: q must be in [0,1)");
  }
  switch (kind_) {
    case DistKind::TwoPoint:
      return q <= 1.0 - c_ ? a_ : b_;
    case DistKind::Uniform:
      return a_ + q * (b_ - a_);
    case DistKind::Exponential:
      return -std::log1p(-q) / a_;
    case DistKind::NormalNonNeg: {
      double lo = numerics::normal_cdf(-a_ / b_);
      return std::max(
          0.0, a_ + b_ * numerics::normal_quantile(lo + q * trunc_norm_z_));
    }
  }
  return 0.0;
}

std::optional<NonDegeneracyWitness> ValuationDistribution::non_degeneracy_witness()
    const {
  NonDegeneracyWitness w;
  switch (kind_) {
    case DistKind::TwoPoint:
      w.v1 = a_;
      w.v2 = b_;
      w.epsilon = 0.25 * (b_ - a_);
      w.mass_low = 1.0 - c_;
      w.mass_high = c_;
      break;
    case DistKind::Uniform:
      w.v1 = a_ + 0.25 * (b_ - a_);
      w.v2 = a_ + 0.75 * (b_ - a_);
      w.epsilon = 0.125 * (b_ - a_);
      w.mass_low = w.mass_high = 0.25;
      break;
    case DistKind::Exponential:
      w.v1 = 0.5 / a_;
      w.v2 = 2.0 / a_;
      w.epsilon = 0.25 / a_;
      w.mass_low = cdf(w.v1 + w.epsilon) - cdf(w.v1 - w.epsilon);
      w.mass_high = cdf(w.v2 + w.epsilon) - cdf(w.v2 - w.epsilon);
      break;
    case DistKind::NormalNonNeg:
      w.v1 = quantile(0.25);
      w.v2 = quantile(0.75);
      w.epsilon = std::min(0.25 * (w.v2 - w.v1), 0.5 * w.v1);
      w.mass_low = cdf(w.v1 + w.epsilon) - cdf(w.v1 - w.epsilon);
      w.mass_high = cdf(w.v2 + w.epsilon) - cdf(w.v2 - w.epsilon);
      break;
  }
  if (!(w.v1 > 0.0 && w.v2 > w.v1 && w.epsilon > 0.0 &&
        w.epsilon < 0.5 * (w.v2 - w.v1) && w.mass_low > 0.0 &&
        w.mass_high > 0.0)) {
    return std::nullopt;
  }
  return w;
}

double ValuationDistribution::sample_one(CounterRng& rng) const {
  double u = rng.next_double();
  switch (kind_) {
    case DistKind::TwoPoint:
      return u < c_ ? b_ : a_;
    case DistKind::Uniform:
      return a_ + u * (b_ - a_);
    case DistKind::Exponential:
      return -std::log1p(-u) / a_;
    case DistKind::NormalNonNeg: {
      double lo = numerics::normal_cdf(-a_ / b_);
      double p = lo + u * trunc_norm_z_;
      return std::max(0.0, a_ + b_ * numerics::normal_quantile(p));
    }
  }
  return 0.0;
}

std::vector<double> ValuationDistribution::sample(std::uint64_t seed,
                                                  std::size_t count) const {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  std::vector<double> out(count);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < count; ++i) out[i] = sample_one(rng);
  return out;
}

std::string ValuationDistribution::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DistKind::TwoPoint:
      os << "twopoint(vL=" << a_ << ",vH=" << b_ << ",pHigh=" << c_ << ")";
      break;
    case DistKind::Uniform:
      os << "uniform(a=" << a_ << ",b=" << b_ << ")";
      break;
    case DistKind::Exponential:
      os << "exp(lambda=" << a_ << ")";
      break;
    case DistKind::NormalNonNeg:
      os << "normal_nonneg(mu=" << a_ << ",sigma=" << b_ << ")";
      break;
  }
  return os.str();
}

namespace {
void check_kind(DistKind have, DistKind want, const char* what) {
  if (have != want) {
    throw std::logic_error(std::string(what) +
                           ": accessor does not match distribution kind");
  }
}
}  // namespace

double ValuationDistribution::param_v_low() const {
  check_kind(kind_, DistKind::TwoPoint, "param_v_low");
  return a_;
}
double ValuationDistribution::param_v_high() const {
  check_kind(kind_, DistKind::TwoPoint, "param_v_high");
  return b_;
}
double ValuationDistribution::param_p_high() const {
  check_kind(kind_, DistKind::TwoPoint, "param_p_high");
  return c_;
}
double ValuationDistribution::param_lo() const {
  check_kind(kind_, DistKind::Uniform, "param_lo");
  return a_;
}
double ValuationDistribution::param_hi() const {
  check_kind(kind_, DistKind::Uniform, "param_hi");
  return b_;
}
double ValuationDistribution::param_lambda() const {
  check_kind(kind_, DistKind::Exponential, "param_lambda");
  return a_;
}
double ValuationDistribution::param_mu() const {
  check_kind(kind_, DistKind::NormalNonNeg, "param_mu");
  return a_;
}
double ValuationDistribution::param_sigma() const {
  check_kind(kind_, DistKind::NormalNonNeg, "param_sigma");
  return b_;
}

}  // namespace royaltylab

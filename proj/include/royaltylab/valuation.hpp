#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "royaltylab/rng.hpp"

namespace royaltylab {

enum class DistKind { TwoPoint, Uniform, Exponential, NormalNonNeg };

struct Atom {
  double value = 0;
  double mass = 0;
};

// Evidence that a distribution is supported on at least two strictly
// positive points: Pr[v1-eps < V < v1+eps] >= mass_low > 0 and likewise
// around v2, with 0 < eps < (v2 - v1) / 2.
struct NonDegeneracyWitness {
  double v1 = 0;
  double v2 = 0;
  double epsilon = 0;
  double mass_low = 0;
  double mass_high = 0;
};

// The end-buyer valuation V: nonnegative support, finite mean and variance.
// Four kinds: two-point {v_low, v_high}, uniform on [lo, hi], exponential
// with rate lambda, and a normal truncated to [0, inf) with renormalized
// density. All queries are pure and safe for concurrent use.
class ValuationDistribution {
 public:
  static ValuationDistribution two_point(double v_low, double v_high,
                                         double p_high);
  static ValuationDistribution uniform(double lo, double hi);
  static ValuationDistribution exponential(double lambda);
  static ValuationDistribution normal_nonneg(double mu, double sigma);

  DistKind kind() const { return kind_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double stddev() const;

  // Density at v >= 0. Two-point distributions have no density; query their
  // point masses through atoms() instead.
  double pdf(double v) const;

  // Pr[V <= v].
  double cdf(double v) const;

  // Pr[V >= v] for v >= 0; includes the mass of an atom at v itself.
  double survival(double v) const;

  // E[V * 1{V >= t}] for t >= 0; accepts t = +inf (returns 0).
  double tail_expectation(double t) const;

  // E[V | V >= t]; requires survival(t) > 0.
  double conditional_mean_above(double t) const;

  // E[V(k:2)] for two i.i.d. draws, k in {1, 2}.
  double order_stat_mean(int k, int n = 2) const;

  // Smallest v with cdf(v) >= q, q in [0, 1).
  double quantile(double q) const;

  bool is_discrete() const { return kind_ == DistKind::TwoPoint; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // Present iff the distribution is supported on two strictly positive
  // points. All four constructible kinds qualify, so this always returns a
  // witness; the optional shape keeps degeneracy checks explicit at call
  // sites.
  std::optional<NonDegeneracyWitness> non_degeneracy_witness() const;

  double sample_one(CounterRng& rng) const;
  std::vector<double> sample(std::uint64_t seed, std::size_t count) const;

  std::string describe() const;

  // Parameter accessors (kind-checked).
  double param_v_low() const;
  double param_v_high() const;
  double param_p_high() const;
  double param_lo() const;
  double param_hi() const;
  double param_lambda() const;
  double param_mu() const;
  double param_sigma() const;

 private:
  ValuationDistribution() = default;

  DistKind kind_ = DistKind::Exponential;
  double a_ = 0, b_ = 0, c_ = 0;  // kind-specific parameters
  double mean_ = 0, variance_ = 0;
  double order_min_ = 0, order_max_ = 0;  // E[V(1:2)], E[V(2:2)]
  double trunc_norm_z_ = 1;               // Pr[N(mu, sigma) >= 0]
  std::vector<Atom> atoms_;
};

}  // namespace royaltylab

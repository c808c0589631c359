#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

namespace royaltylab::numerics {

// Standard normal pdf/cdf and inverse cdf. The inverse uses Acklam's rational
// approximation polished with one Halley step, accurate to ~1e-15.
double normal_pdf(double x);
double normal_cdf(double x);
double normal_cdf_upper(double x);  // 1 - cdf(x), stable in the right tail
double normal_quantile(double p);

// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9);

// Golden-section maximization of a unimodal f on [lo, hi]; returns argmax.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-10, int max_iter = 200);

// Brent root finding; requires f(lo) and f(hi) to bracket a sign change.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-12, int max_iter = 200);

struct Point2 {
  double x = 0, y = 0;
};

struct NelderMeadResult {
  Point2 best;
  double value = 0;
  int iterations = 0;
};

// Nelder-Mead maximization in 2-D with a fixed iteration budget. The caller
// embeds any bound handling in f (e.g. clamp-and-evaluate).
NelderMeadResult nelder_mead_max(const std::function<double(Point2)>& f,
                                 Point2 start, double step, int max_iter = 500,
                                 double tol = 1e-8);

// Pairwise (cascade) summation: deterministic for a fixed array regardless of
// how the array was filled.
double pairwise_sum(std::span<const double> values);

// Pairwise summation of f(i) for i in [0, n) without materializing the terms.
double pairwise_sum_indexed(std::size_t n,
                            const std::function<double(std::size_t)>& f);

}  // namespace royaltylab::numerics

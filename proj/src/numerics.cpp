#include "royaltylab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace royaltylab::numerics {

double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779399461;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_cdf_upper(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double normal_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("normal_quantile: p outside [0,1]");
  }
  if (p == 0.0) return -HUGE_VAL;
  if (p == 1.0) return HUGE_VAL;

  // Acklam's approximation.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley step against the exact cdf.
  double e = normal_cdf(x) - p;
  double u = e / normal_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, m, fm, flm);
  double right = simpson(m, fm, b, fb, frm);
  double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    return left + right + diff / 15.0;
  }
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                          depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(a, fa, b, fb, fm);
  return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, abs_tol, 52);
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int max_iter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    throw std::invalid_argument("brent_root: endpoints do not bracket a root");
  }
  double c = a, fc = fa;
  bool mflag = true;
  double d = 0.0;
  for (int i = 0; i < max_iter; ++i) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                  0.5 * tol;
    double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;
    double s;
    if (fa != fc && fb != fc) {
      // inverse quadratic interpolation
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);  // secant
    }
    double lo_bound = (3.0 * a + b) / 4.0;
    bool cond = (s < std::min(lo_bound, b) || s > std::max(lo_bound, b)) ||
                (mflag && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                (!mflag && std::abs(s - b) >= std::abs(c - d) / 2.0) ||
                (mflag && std::abs(b - c) < tol1) ||
                (!mflag && std::abs(c - d) < tol1);
    if (cond) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

NelderMeadResult nelder_mead_max(const std::function<double(Point2)>& f,
                                 Point2 start, double step, int max_iter,
                                 double tol) {
  struct Vertex {
    Point2 p;
    double v;
  };
  Vertex s[3] = {
      {start, f(start)},
      {{start.x + step, start.y}, 0.0},
      {{start.x, start.y + step}, 0.0},
  };
  s[1].v = f(s[1].p);
  s[2].v = f(s[2].p);
  auto order = [&] {
    std::sort(std::begin(s), std::end(s),
              [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
  };
  int it = 0;
  for (; it < max_iter; ++it) {
    order();
    if (std::abs(s[0].v - s[2].v) < tol) break;
    Point2 centroid{0.5 * (s[0].p.x + s[1].p.x), 0.5 * (s[0].p.y + s[1].p.y)};
    auto at = [&](double coef) {
      return Point2{centroid.x + coef * (centroid.x - s[2].p.x),
                    centroid.y + coef * (centroid.y - s[2].p.y)};
    };
    Point2 xr = at(1.0);
    double fr = f(xr);
    if (fr > s[0].v) {
      Point2 xe = at(2.0);
      double fe = f(xe);
      s[2] = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr > s[1].v) {
      s[2] = {xr, fr};
    } else {
      Point2 xc = at(-0.5);
      double fcv = f(xc);
      if (fcv > s[2].v) {
        s[2] = {xc, fcv};
      } else {
        // shrink toward the best vertex
        for (int k = 1; k < 3; ++k) {
          s[k].p.x = s[0].p.x + 0.5 * (s[k].p.x - s[0].p.x);
          s[k].p.y = s[0].p.y + 0.5 * (s[k].p.y - s[0].p.y);
          s[k].v = f(s[k].p);
        }
      }
    }
  }
  order();
  return {s[0].p, s[0].v, it};
}

namespace {

double pairwise_block(std::span<const double> v) {
  if (v.size() <= 32) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  std::size_t half = v.size() / 2;
  return pairwise_block(v.first(half)) + pairwise_block(v.subspan(half));
}

double pairwise_block_indexed(std::size_t begin, std::size_t end,
                              const std::function<double(std::size_t)>& f) {
  if (end - begin <= 32) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += f(i);
    return acc;
  }
  std::size_t mid = begin + (end - begin) / 2;
  return pairwise_block_indexed(begin, mid, f) +
         pairwise_block_indexed(mid, end, f);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return pairwise_block(values);
}

double pairwise_sum_indexed(std::size_t n,
                            const std::function<double(std::size_t)>& f) {
  if (n == 0) return 0.0;
  return pairwise_block_indexed(0, n, f);
}

}  // namespace royaltylab::numerics

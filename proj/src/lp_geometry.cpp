#include "demb/lp_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "demb/kernels.hpp"

namespace demb {

namespace {

void check_finite(std::span<const double> v, const char* who) {
  for (const double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(who) + ": non-finite entry");
    }
  }
}

void check_same_dim(std::span<const double> a, std::span<const double> b,
                    const char* who) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

// sum_i |v_i|^p with exact fast paths at the interval endpoints.
double pow_sum(const double* v, std::size_t n, double p) {
  if (p == 1.0) return kern::sum_abs(v, n);
  if (p == 2.0) return kern::sum_squares(v, n);
  return kern::sum_abs_pow(v, n, p);
}

double dist_pow_sum(const double* a, const double* b, std::size_t n, double p) {
  if (p == 1.0) return kern::dist_abs(a, b, n);
  if (p == 2.0) return kern::dist_squares(a, b, n);
  return kern::dist_abs_pow(a, b, n, p);
}

double root_p(double s, double p) {
  if (s == 0.0) return 0.0;
  if (p == 1.0) return s;
  if (p == 2.0) return std::sqrt(s);
  return std::exp(std::log(s) / p);
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw std::invalid_argument("PExponent: p must lie in [1, 2], got " +
                                std::to_string(p));
  }
}

double lp_norm(std::span<const double> v, PExponent p) {
  check_finite(v, "lp_norm");
  return root_p(pow_sum(v.data(), v.size(), p.value()), p.value());
}

double lp_distance(std::span<const double> a, std::span<const double> b, PExponent p) {
  check_same_dim(a, b, "lp_distance");
  check_finite(a, "lp_distance");
  check_finite(b, "lp_distance");
  return root_p(dist_pow_sum(a.data(), b.data(), a.size(), p.value()), p.value());
}

double smoothness_gap(std::span<const double> a, std::span<const double> b,
                      PExponent pe) {
  check_same_dim(a, b, "smoothness_gap");
  check_finite(a, "smoothness_gap");
  check_finite(b, "smoothness_gap");
  const double p = pe.value();
  const std::size_t n = a.size();

  std::vector<double> sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];

  const double na = root_p(pow_sum(a.data(), n, p), p);
  const double nb = root_p(pow_sum(b.data(), n, p), p);
  const double nsum = root_p(pow_sum(sum.data(), n, p), p);
  const double ndiff = root_p(dist_pow_sum(a.data(), b.data(), n, p), p);

  return 2.0 * (na * na + nb * nb) - nsum * nsum - (p - 1.0) * ndiff * ndiff;
}

double diamond_gap(std::span<const double> x, std::span<const double> y,
                   std::span<const double> z, std::span<const double> w, PExponent pe) {
  check_same_dim(x, y, "diamond_gap");
  check_same_dim(x, z, "diamond_gap");
  check_same_dim(x, w, "diamond_gap");
  check_finite(x, "diamond_gap");
  check_finite(y, "diamond_gap");
  check_finite(z, "diamond_gap");
  check_finite(w, "diamond_gap");
  const double p = pe.value();
  const std::size_t n = x.size();

  auto dist = [&](std::span<const double> u, std::span<const double> v) {
    return root_p(dist_pow_sum(u.data(), v.data(), n, p), p);
  };

  const double xy = dist(x, y);
  const double yw = dist(y, w);
  const double wz = dist(w, z);
  const double zx = dist(z, x);
  const double yz = dist(y, z);
  const double xw = dist(x, w);

  return (xy * xy + yw * yw + wz * wz + zx * zx) - (yz * yz + (p - 1.0) * xw * xw);
}

}  // namespace demb

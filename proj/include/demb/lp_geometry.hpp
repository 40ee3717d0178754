#pragma once

#include <span>

namespace demb {

// Ambient exponent, restricted to the 1 <= p <= 2 regime. Certificate-grade
// statements additionally need p > 1; p = 1 is admitted for the gap
// functions as the continuity limit.
class PExponent {
 public:
  explicit PExponent(double p);
  double value() const { return p_; }
  bool certificate_grade() const { return p_ > 1.0; }

 private:
  double p_;
};

// (sum_i |v_i|^p)^{1/p}; rejects non-finite entries.
double lp_norm(std::span<const double> v, PExponent p);

// ||a - b||_p.
double lp_distance(std::span<const double> a, std::span<const double> b, PExponent p);

// Two-point smoothness gap 2(||a||^2 + ||b||^2) - ||a+b||^2 - (p-1)||a-b||^2,
// all norms l_p. Nonnegative for 1 <= p <= 2 (zero at p = 2: parallelogram
// identity).
double smoothness_gap(std::span<const double> a, std::span<const double> b, PExponent p);

// Quadrilateral gap
//   (||x-y||^2 + ||y-w||^2 + ||w-z||^2 + ||z-x||^2)
//    - (||y-z||^2 + (p-1)||x-w||^2),
// nonnegative for 1 <= p <= 2. At p = 2 this is the short diagonals lemma.
double diamond_gap(std::span<const double> x, std::span<const double> y,
                   std::span<const double> z, std::span<const double> w, PExponent p);

}  // namespace demb

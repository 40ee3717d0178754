#pragma once

#include <iosfwd>
#include <optional>

#include "demb/diamond_graph.hpp"
#include "demb/embedding.hpp"

namespace demb {

// Both sides of the anti-edge inequality
//   ||f(s)-f(t)||^2 + (p-1) sum_i sum_{(x,y) in A_i} ||f(x)-f(y)||^2
//     <= sum_{(x,y) in E(G_k)} ||f(x)-f(y)||^2
// evaluated for a concrete embedding. slack = rhs - lhs is nonnegative for
// any embedding and 1 <= p <= 2, up to 1e-9 relative roundoff.
struct Certificate {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  int k = 0;
  double p = 2.0;
};

// Summation is level-major in the stored canonical order, so certificates
// are bit-reproducible across runs.
Certificate poincare_sides(const DiamondGraph& g, const Embedding& f);

// Theorem-level distortion lower bound sqrt(1 + (p-1)k).
double certified_lower_bound(int k, PExponent p);

// Minimum dimension 2^{k/(s^2 D^2 - 1)} with s = 2*c1 forced by the
// inequality chain: G_k sits in L_1 with distortion c1, l_1^d is
// 2^{1/p}-isomorphic to l_p^d at p = 1 + 1/log2(d), and any embedding into
// l_p^d pays sqrt(1 + k/log2 d). Returns nullopt when s^2 D^2 <= 1 (the
// rearrangement excludes no finite dimension); unreachable when the
// preconditions D >= 1, c1 >= 1 hold.
std::optional<double> corollary_dimension_bound(int k, double distortion, double c1);

// JSON {"k","p","lhs","rhs","slack","lower_bound"}.
void write_certificate_json(std::ostream& os, const Certificate& c);

}  // namespace demb

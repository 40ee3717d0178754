#include "demb/poincare.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "demb/kernels.hpp"

namespace demb {

namespace {

double dist_sq(const Embedding& f, VertexId x, VertexId y) {
  const double p = f.p().value();
  const auto a = f.row(x);
  const auto b = f.row(y);
  double d;
  if (p == 1.0) {
    d = kern::dist_abs(a.data(), b.data(), a.size());
  } else if (p == 2.0) {
    return kern::dist_squares(a.data(), b.data(), a.size());
  } else {
    const double s = kern::dist_abs_pow(a.data(), b.data(), a.size(), p);
    d = s == 0.0 ? 0.0 : std::exp(std::log(s) / p);
  }
  return d * d;
}

}  // namespace

Certificate poincare_sides(const DiamondGraph& g, const Embedding& f) {
  if (f.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("poincare_sides: embedding covers " +
                                std::to_string(f.num_vertices()) + " vertices, graph has " +
                                std::to_string(g.num_vertices()));
  }
  const double p = f.p().value();

  Certificate c;
  c.k = g.level();
  c.p = p;

  double anti_sum = 0.0;
  for (int i = 1; i <= g.level(); ++i) {
    for (const AntiEdge& ae : g.anti_edges(i)) anti_sum += dist_sq(f, ae.a, ae.b);
  }
  c.lhs = dist_sq(f, kSourceVertex, kSinkVertex) + (p - 1.0) * anti_sum;

  double edge_sum = 0.0;
  for (const LeveledEdge& e : g.current_edges()) edge_sum += dist_sq(f, e.u, e.v);
  c.rhs = edge_sum;

  c.slack = c.rhs - c.lhs;
  return c;
}

double certified_lower_bound(int k, PExponent p) {
  if (k < 0) throw std::invalid_argument("certified_lower_bound: k must be nonnegative");
  return std::sqrt(1.0 + (p.value() - 1.0) * static_cast<double>(k));
}

std::optional<double> corollary_dimension_bound(int k, double distortion, double c1) {
  if (k < 0) throw std::invalid_argument("corollary_dimension_bound: k must be nonnegative");
  if (!(distortion >= 1.0)) {
    throw std::invalid_argument("corollary_dimension_bound: need D >= 1");
  }
  if (!(c1 >= 1.0)) {
    throw std::invalid_argument("corollary_dimension_bound: need c1 >= 1");
  }
  const double s = 2.0 * c1;
  const double denom = s * s * distortion * distortion - 1.0;
  if (denom <= 0.0) return std::nullopt;
  return std::exp2(static_cast<double>(k) / denom);
}

void write_certificate_json(std::ostream& os, const Certificate& c) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"k\": %d, \"p\": %.17g, \"lhs\": %.17g, \"rhs\": %.17g, "
                "\"slack\": %.17g, \"lower_bound\": %.17g}\n",
                c.k, c.p, c.lhs, c.rhs, c.slack,
                certified_lower_bound(c.k, PExponent(c.p)));
  os << buf;
}

}  // namespace demb

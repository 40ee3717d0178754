#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "demb/diamond_graph.hpp"

namespace demb {

// Symmetric all-pairs distance matrix, dense row-major storage.
class MetricMatrix {
 public:
  explicit MetricMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  // Mirrored write.
  void set(std::size_t i, std::size_t j, double value) {
    d_[i * n_ + j] = value;
    d_[j * n_ + i] = value;
  }

  // Unmirrored write; lets tests build deliberately broken matrices.
  double& at_raw(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

  double mean_distance() const;
  double max_distance() const;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

// All-pairs shortest-path distances of G_k: unweighted BFS over the level-k
// edge set scaled by 2^-k, so every entry is an exact binary fraction.
// Capacity: k <= 6 (dense |V_6|^2 = 2732^2 matrix).
MetricMatrix shortest_path_metric(const DiamondGraph& g);

struct MetricViolation {
  enum class Kind { reflexivity, symmetry, positivity, triangle };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // middle point, triangle violations only
  double magnitude = 0.0;
};

// Empty iff the metric axioms hold (triangle checked within `tol`).
std::vector<MetricViolation> verify_metric(const MetricMatrix& m, double tol = 1e-12);

// CSV "i,j,d", one row per unordered pair i < j, 17 significant digits.
void write_metric_csv(std::ostream& os, const MetricMatrix& m);

}  // namespace demb

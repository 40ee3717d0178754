#include "demb/path_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "demb/errors.hpp"

namespace demb {

double MetricMatrix::mean_distance() const {
  if (n_ < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) sum += (*this)(i, j);
  return sum / (0.5 * static_cast<double>(n_) * static_cast<double>(n_ - 1));
}

double MetricMatrix::max_distance() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, (*this)(i, j));
  return m;
}

MetricMatrix shortest_path_metric(const DiamondGraph& g) {
  if (g.level() > 6) {
    throw capacity_error("shortest_path_metric: dense matrix capped at k <= 6, got k = " +
                         std::to_string(g.level()));
  }
  const std::size_t n = g.num_vertices();
  const double unit = edge_length(g.level());

  std::vector<std::vector<VertexId>> adj(n);
  for (const LeveledEdge& e : g.current_edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  MetricMatrix m(n);

  // Per-source BFS; hop counts are exact integers, the final distance is
  // hops * 2^-k. Sources are independent, so they run on a small pool.
  auto run_sources = [&](std::size_t begin, std::size_t end) {
    std::vector<int> hops(n);
    std::vector<VertexId> queue(n);
    for (std::size_t s = begin; s < end; ++s) {
      std::fill(hops.begin(), hops.end(), -1);
      std::size_t head = 0, tail = 0;
      hops[s] = 0;
      queue[tail++] = static_cast<VertexId>(s);
      while (head < tail) {
        const VertexId v = queue[head++];
        for (const VertexId w : adj[v]) {
          if (hops[w] < 0) {
            hops[w] = hops[v] + 1;
            queue[tail++] = w;
          }
        }
      }
      for (std::size_t t = 0; t < n; ++t) m.at_raw(s, t) = hops[t] * unit;
    }
  };

  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, n / 64));
  if (workers <= 1) {
    run_sources(0, n);
  } else {
    std::vector<std::future<void>> tasks;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t b = 0; b < n; b += chunk) {
      tasks.push_back(std::async(std::launch::async, run_sources, b,
                                 std::min(n, b + chunk)));
    }
    for (auto& t : tasks) t.get();
  }
  return m;
}

std::vector<MetricViolation> verify_metric(const MetricMatrix& m, double tol) {
  std::vector<MetricViolation> out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) {
      out.push_back({MetricViolation::Kind::reflexivity, i, i, 0, std::fabs(m(i, i))});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) {
        out.push_back(
            {MetricViolation::Kind::symmetry, i, j, 0, std::fabs(m(i, j) - m(j, i))});
      }
      if (!(m(i, j) > 0.0)) {
        out.push_back({MetricViolation::Kind::positivity, i, j, 0, -m(i, j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = m(i, j) - m(i, k) - m(k, j);
        if (excess > tol) {
          out.push_back({MetricViolation::Kind::triangle, i, j, k, excess});
        }
      }
    }
  }
  return out;
}

void write_metric_csv(std::ostream& os, const MetricMatrix& m) {
  os << "i,j,d\n";
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%zu,%zu,%.17g\n", i, j, m(i, j));
      os << buf;
    }
  }
}

}  // namespace demb

#include "demb/diamond_graph.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "demb/errors.hpp"

namespace demb {

DiamondGraph DiamondGraph::build(int k) {
  if (k < 0) throw std::invalid_argument("build_diamond: k must be nonnegative");
  if (k > kMaxLevel) {
    throw capacity_error("build_diamond: k = " + std::to_string(k) +
                         " exceeds the size cap k <= " + std::to_string(kMaxLevel));
  }

  DiamondGraph g;
  g.level_ = k;
  g.num_vertices_ = 2;
  g.edges_by_level_.resize(static_cast<std::size_t>(k) + 1);
  g.anti_edges_by_level_.resize(static_cast<std::size_t>(k) + 1);
  g.edges_by_level_[0].push_back({kSourceVertex, kSinkVertex, 0});

  for (int i = 1; i <= k; ++i) {
    const auto& parents = g.edges_by_level_[static_cast<std::size_t>(i) - 1];
    auto& children = g.edges_by_level_[static_cast<std::size_t>(i)];
    auto& antis = g.anti_edges_by_level_[static_cast<std::size_t>(i)];
    children.reserve(parents.size() * 4);
    antis.reserve(parents.size());

    VertexId next = static_cast<VertexId>(g.num_vertices_);
    for (const LeveledEdge& e : parents) {
      const VertexId a = next++;
      const VertexId b = next++;
      // replacement quadrilateral u,a,v,b; each child stored with u < v
      const VertexId quad[4][2] = {{e.u, a}, {a, e.v}, {e.v, b}, {b, e.u}};
      for (const auto& c : quad) {
        const VertexId lo = c[0] < c[1] ? c[0] : c[1];
        const VertexId hi = c[0] < c[1] ? c[1] : c[0];
        children.push_back({lo, hi, i});
      }
      antis.push_back({a, b, i, e});
    }
    g.num_vertices_ = next;
  }
  return g;
}

const std::vector<LeveledEdge>& DiamondGraph::edges(int i) const {
  if (i < 0 || i > level_) {
    throw std::out_of_range("DiamondGraph::edges: level " + std::to_string(i) +
                            " out of range [0, " + std::to_string(level_) + "]");
  }
  return edges_by_level_[static_cast<std::size_t>(i)];
}

const std::vector<AntiEdge>& DiamondGraph::anti_edges(int i) const {
  if (i < 1 || i > level_) {
    throw std::out_of_range("DiamondGraph::anti_edges: level " + std::to_string(i) +
                            " out of range [1, " + std::to_string(level_) + "]");
  }
  return anti_edges_by_level_[static_cast<std::size_t>(i)];
}

double edge_length(int level) {
  if (level < 0) throw std::invalid_argument("edge_length: level must be nonnegative");
  return std::ldexp(1.0, -level);
}

std::uint64_t vertex_count_for_level(int k) {
  if (k < 0) throw std::invalid_argument("vertex_count_for_level: k must be nonnegative");
  if (k > 30) throw capacity_error("vertex_count_for_level: k too large for 64-bit count");
  return (2ull * (1ull << (2 * k)) + 4ull) / 3ull;
}

int level_for_points(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("level_for_points: need n >= 2");
  int k = 0;
  std::uint64_t count = 2;  // |V(G_0)|
  while (count < n) {
    ++k;
    if (k > 30) throw capacity_error("level_for_points: n too large");
    count += 2ull * (1ull << (2 * (k - 1)));  // V_k = V_{k-1} + 2*4^{k-1}
  }
  return k;
}

void write_graph_json(std::ostream& os, const DiamondGraph& g) {
  os << "{\n";
  os << "  \"level\": " << g.level() << ",\n";
  os << "  \"num_vertices\": " << g.num_vertices() << ",\n";
  os << "  \"edges\": [";
  bool first = true;
  for (int i = 0; i <= g.level(); ++i) {
    for (const LeveledEdge& e : g.edges(i)) {
      os << (first ? "\n" : ",\n");
      first = false;
      os << "    {\"u\": " << e.u << ", \"v\": " << e.v << ", \"level\": " << e.level
         << "}";
    }
  }
  os << "\n  ],\n";
  os << "  \"anti_edges\": [";
  first = true;
  for (int i = 1; i <= g.level(); ++i) {
    for (const AntiEdge& ae : g.anti_edges(i)) {
      os << (first ? "\n" : ",\n");
      first = false;
      os << "    {\"a\": " << ae.a << ", \"b\": " << ae.b << ", \"level\": " << ae.level
         << ", \"parent_u\": " << ae.parent.u << ", \"parent_v\": " << ae.parent.v
         << "}";
    }
  }
  os << "\n  ]\n";
  os << "}\n";
}

}  // namespace demb

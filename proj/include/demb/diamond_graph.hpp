#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace demb {

using VertexId = std::uint32_t;

// Vertex 0 is s, vertex 1 is t (the endpoints of G_0).
inline constexpr VertexId kSourceVertex = 0;
inline constexpr VertexId kSinkVertex = 1;

// Edge of the recursive construction; stored with u < v. A level-i edge has
// intended length 2^-i.
struct LeveledEdge {
  VertexId u;
  VertexId v;
  int level;

  bool operator==(const LeveledEdge&) const = default;
};

// Diagonal pair (a, b) created when `parent` was replaced by a quadrilateral;
// parent.level == level - 1.
struct AntiEdge {
  VertexId a;
  VertexId b;
  int level;
  LeveledEdge parent;

  bool operator==(const AntiEdge&) const = default;
};

// Level-k diamond graph with its full construction history. Immutable once
// built; safe to share read-only across threads.
class DiamondGraph {
 public:
  // Largest level the constructor accepts (4^8 = 65536 edges at the cap).
  static constexpr int kMaxLevel = 8;

  static DiamondGraph build(int k);

  int level() const { return level_; }
  std::size_t num_vertices() const { return num_vertices_; }

  // Edges created at level i, creation order, each canonical (u < v).
  // Children of the j-th level-(i-1) edge sit at positions 4j..4j+3.
  const std::vector<LeveledEdge>& edges(int i) const;

  // Anti-edges A_i, 1 <= i <= level; the j-th anti-edge corresponds to the
  // j-th level-(i-1) edge.
  const std::vector<AntiEdge>& anti_edges(int i) const;

  // E(G_k): the current graph's edge set.
  const std::vector<LeveledEdge>& current_edges() const { return edges(level_); }

 private:
  DiamondGraph() = default;

  int level_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<std::vector<LeveledEdge>> edges_by_level_;
  std::vector<std::vector<AntiEdge>> anti_edges_by_level_;  // index 0 unused
};

inline DiamondGraph build_diamond(int k) { return DiamondGraph::build(k); }

// 2^-i, exact in binary floating point.
double edge_length(int level);

// |V(G_k)| = (2*4^k + 4) / 3.
std::uint64_t vertex_count_for_level(int k);

// Smallest k with |V(G_k)| >= n; requires n >= 2.
int level_for_points(std::uint64_t n);

// JSON graph schema used by the CLI: level, num_vertices, edges in
// level-major canonical order, anti-edges with their parent endpoints.
void write_graph_json(std::ostream& os, const DiamondGraph& g);

}  // namespace demb

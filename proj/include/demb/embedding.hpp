#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "demb/diamond_graph.hpp"
#include "demb/lp_geometry.hpp"

namespace demb {

// Map from vertices {0..n-1} to d-dimensional coordinate vectors, together
// with the ambient exponent p. Row-major coordinate storage.
class Embedding {
 public:
  Embedding(std::size_t num_vertices, std::size_t dim, PExponent p);
  Embedding(std::size_t num_vertices, std::size_t dim, PExponent p,
            std::vector<double> coords);

  std::size_t num_vertices() const { return n_; }
  std::size_t dim() const { return dim_; }
  PExponent p() const { return p_; }

  std::span<const double> row(std::size_t v) const {
    return {coords_.data() + v * dim_, dim_};
  }
  std::span<double> row_mut(std::size_t v) { return {coords_.data() + v * dim_, dim_}; }

  const std::vector<double>& coords() const { return coords_; }
  std::vector<double>& coords_mut() { return coords_; }

 private:
  std::size_t n_;
  std::size_t dim_;
  PExponent p_;
  std::vector<double> coords_;
};

// CSV "vertex,c1,...,cd", one row per vertex, 17 significant digits.
void write_embedding_csv(std::ostream& os, const Embedding& f);

}  // namespace demb

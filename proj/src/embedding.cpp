#include "demb/embedding.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace demb {

Embedding::Embedding(std::size_t num_vertices, std::size_t dim, PExponent p)
    : n_(num_vertices), dim_(dim), p_(p), coords_(num_vertices * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("Embedding: dimension must be >= 1");
}

Embedding::Embedding(std::size_t num_vertices, std::size_t dim, PExponent p,
                     std::vector<double> coords)
    : n_(num_vertices), dim_(dim), p_(p), coords_(std::move(coords)) {
  if (dim == 0) throw std::invalid_argument("Embedding: dimension must be >= 1");
  if (coords_.size() != n_ * dim_) {
    throw std::invalid_argument("Embedding: coordinate array has wrong size");
  }
  for (const double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("Embedding: non-finite coordinate");
  }
}

void write_embedding_csv(std::ostream& os, const Embedding& f) {
  os << "vertex";
  for (std::size_t j = 1; j <= f.dim(); ++j) os << ",c" << j;
  os << "\n";
  char buf[64];
  for (std::size_t v = 0; v < f.num_vertices(); ++v) {
    os << v;
    for (const double c : f.row(v)) {
      std::snprintf(buf, sizeof(buf), ",%.17g", c);
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace demb

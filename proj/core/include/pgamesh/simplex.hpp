#pragma once

#include <initializer_list>
#include <vector>

#include "pgamesh/multivector.hpp"

namespace pgamesh {

/// An ordered tuple of 1 to 4 normalized points (k = vertex count - 1).
/// Vertices are normalized to unit weight at construction; ideal points are
/// rejected. Orientation is implied by the vertex order.
class Simplex {
 public:
  explicit Simplex(std::vector<Multivector> vertices,
                   double tolerance = kDefaultTolerance);
  Simplex(std::initializer_list<Vec3> positions);

  int k() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Multivector>& vertices() const { return vertices_; }
  const Multivector& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Multivector> vertices_;
};

/// A formal integer-weighted sum of equal-k simplices.
struct ChainTerm {
  int coefficient;
  Simplex simplex;
};
struct Chain {
  std::vector<ChainTerm> terms;
};

/// The join of all vertices: the oriented flat containing the simplex,
/// weighted with k! times its k-magnitude. Degenerate simplices give zero
/// or ideal carriers; that is not an error.
Multivector carrier(const Simplex& s);

/// (1/k!) ||carrier||: amount, length, area or volume of the simplex.
double magnitude(const Simplex& s);

/// Alternating sum of facets. k = 0 gives the empty chain.
Chain boundary(const Simplex& s);

/// Sum of signed facet carriers of a chain.
Multivector chain_carrier_sum(const Chain& c);

/// (1/k!) ||sum of boundary facet carriers||_inf; equals magnitude(s).
double magnitude_from_boundary(const Simplex& s);

}  // namespace pgamesh

#pragma once

#include "traverse/rational.hpp"
#include "traverse/strata.hpp"
#include "traverse/sweep.hpp"

#include <string>
#include <vector>

namespace traverse {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
  Integer& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  bool is_zero() const;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ..., positive.
  std::vector<Integer> divisors;
};

SmithForm smith_ranks(IntMatrix m);

/// Graded free Z-module with boundary maps; boundary[j] maps degree j to j - 1
/// and has shape rank(j - 1) x rank(j); boundary[0] is empty.
struct ChainComplex {
  std::vector<std::vector<std::string>> basis;
  std::vector<IntMatrix> boundary;

  std::vector<std::size_t> ranks() const;
  bool boundary_squares_to_zero() const;
};

int euler_characteristic(const ChainComplex& complex);

struct HomologyGroups {
  std::vector<std::size_t> betti;
  /// Torsion coefficients (divisors > 1) per degree.
  std::vector<std::vector<Integer>> torsion;
  int euler = 0;
};

/// Throws Error(BoundaryMismatch) if the boundary maps do not compose to zero.
HomologyGroups compute_homology(const ChainComplex& complex);

/// Cellular chain complex of T(v): vertices in degree 0, edges in degree 1,
/// each edge oriented by the sweep direction. A closed edge without vertices
/// gets an auxiliary 0-cell.
ChainComplex mho_complex_of_graph(const TrajectoryGraph& graph);

/// Cellular chain complex of DX built from the strata. Closed boundary
/// circles of vertexless slabs get an auxiliary 0-cell and a doubled
/// auxiliary segment so that every cell is a disk.
ChainComplex cw_complex_of_double(const StrataTable& table);

}  // namespace traverse

#include "traverse/homology.hpp"

#include "traverse/error.hpp"

#include <algorithm>
#include <utility>

namespace traverse {

bool IntMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::Internal, "matrix shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

SmithForm smith_ranks(IntMatrix m) {
  SmithForm out;
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m.at(i, j) != 0 && (pi == rows || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool done = false;
    while (!done) {
      done = true;
      const Integer pivot = m.at(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) done = false;
      }
      if (!done) {
        // A remainder is smaller than the pivot: move it into place and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i) {
          if (m.at(i, t) != 0 && abs(m.at(i, t)) < abs(m.at(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t; j < cols; ++j) {
          if (m.at(t, j) != 0 && abs(m.at(t, j)) < abs(m.at(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the rest of the block.
      for (std::size_t i = t + 1; i < rows && done; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m.at(t, k) += m.at(i, k);
            done = false;
            break;
          }
        }
      }
    }
    out.divisors.push_back(abs(m.at(t, t)));
    ++t;
  }
  out.rank = out.divisors.size();
  return out;
}

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& b : basis) r.push_back(b.size());
  return r;
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (std::size_t j = 2; j < boundary.size(); ++j) {
    if (!(boundary[j - 1] * boundary[j]).is_zero()) return false;
  }
  return true;
}

int euler_characteristic(const ChainComplex& complex) {
  int chi = 0;
  for (std::size_t j = 0; j < complex.basis.size(); ++j) {
    chi += (j % 2 == 0 ? 1 : -1) * static_cast<int>(complex.basis[j].size());
  }
  return chi;
}

HomologyGroups compute_homology(const ChainComplex& complex) {
  if (!complex.boundary_squares_to_zero()) {
    throw Error(ErrorCode::BoundaryMismatch, "boundary maps do not compose to zero");
  }
  const std::size_t top = complex.basis.size();
  std::vector<SmithForm> forms(top + 1);
  for (std::size_t j = 1; j < top; ++j) forms[j] = smith_ranks(complex.boundary[j]);
  HomologyGroups h;
  for (std::size_t j = 0; j < top; ++j) {
    const std::size_t out_rank = j >= 1 ? forms[j].rank : 0;
    const std::size_t in_rank = j + 1 < top ? forms[j + 1].rank : 0;
    h.betti.push_back(complex.basis[j].size() - out_rank - in_rank);
    std::vector<Integer> tors;
    if (j + 1 < top) {
      for (const auto& d : forms[j + 1].divisors) {
        if (d > 1) tors.push_back(d);
      }
    }
    h.torsion.push_back(tors);
  }
  h.euler = euler_characteristic(complex);
  return h;
}

ChainComplex mho_complex_of_graph(const TrajectoryGraph& graph) {
  ChainComplex c;
  c.basis.resize(2);
  for (const auto& v : graph.vertices) c.basis[0].push_back("v" + std::to_string(v.id) + v.pattern.to_string());
  for (const auto& e : graph.edges) {
    if (!e.start.vertex && !e.end.vertex) c.basis[0].push_back("marker:e" + std::to_string(e.id));
  }
  for (const auto& e : graph.edges) c.basis[1].push_back("e" + std::to_string(e.id) + e.pattern.to_string());
  c.boundary.resize(2);
  IntMatrix d(c.basis[0].size(), graph.edges.size());
  for (const auto& e : graph.edges) {
    if (e.end.vertex) d.at(*e.end.vertex, e.id) += 1;
    if (e.start.vertex) d.at(*e.start.vertex, e.id) -= 1;
  }
  c.boundary[1] = d;
  return c;
}

ChainComplex cw_complex_of_double(const StrataTable& table) {
  // Cells: every DX stratum, plus markers for closed circles.
  std::vector<std::vector<std::size_t>> cells(3);
  std::vector<std::size_t> index(table.dx.size());
  ChainComplex c;
  c.basis.resize(3);
  for (const auto& s : table.dx) {
    index[s.id] = cells[s.dimension].size();
    cells[s.dimension].push_back(s.id);
    c.basis[s.dimension].push_back(to_string(s.location) + ":" + s.kind + "#" + std::to_string(s.id) +
                                   s.pattern.to_string());
  }
  // Markers: for a slab whose arcs are closed, a point on each arc and a
  // segment joining them on each sheet.
  struct Marker {
    std::size_t bottom_point, top_point;
    std::size_t segment[2];
  };
  std::map<std::size_t, Marker> markers;  // keyed by X slab id
  for (const auto& s : table.x) {
    if (s.kind != "slab" || !s.start_pieces.empty() || !s.end_pieces.empty()) continue;
    const auto& bottom = table.x[*s.bottom];
    if (bottom.from || bottom.to) continue;
    Marker m{};
    m.bottom_point = c.basis[0].size();
    c.basis[0].push_back("marker:bottom#" + std::to_string(s.id));
    m.top_point = c.basis[0].size();
    c.basis[0].push_back("marker:top#" + std::to_string(s.id));
    for (int sheet = 0; sheet < 2; ++sheet) {
      m.segment[sheet] = c.basis[1].size();
      c.basis[1].push_back(std::string(sheet == 0 ? "interior" : "mirror") + ":marker_segment#" + std::to_string(s.id));
    }
    markers[s.id] = m;
  }

  IntMatrix d1(c.basis[0].size(), c.basis[1].size());
  IntMatrix d2(c.basis[1].size(), c.basis[2].size());
  for (const auto& s : table.dx) {
    if (s.dimension == 1) {
      const std::size_t col = index[s.id];
      if (s.to) d1.at(index[*s.to], col) += 1;
      if (s.from) d1.at(index[*s.from], col) -= 1;
    }
  }
  for (const auto& [slab, m] : markers) {
    for (int sheet = 0; sheet < 2; ++sheet) {
      d1.at(m.top_point, m.segment[sheet]) += 1;
      d1.at(m.bottom_point, m.segment[sheet]) -= 1;
    }
  }
  // A slab in (s, t) coordinates: bottom - top + (upper end) - (lower end);
  // the mirror sheet carries the opposite orientation.
  for (const auto& s : table.dx) {
    if (s.dimension != 2) continue;
    const std::size_t col = index[s.id];
    const int sign = s.location == Location::Mirror ? -1 : 1;
    d2.at(index[*s.bottom], col) += sign;
    d2.at(index[*s.top], col) -= sign;
    for (auto p : s.end_pieces) d2.at(index[p], col) += sign;
    for (auto p : s.start_pieces) d2.at(index[p], col) -= sign;
  }
  c.boundary = {IntMatrix(), d1, d2};
  return c;
}

}  // namespace traverse

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contracta/errors.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// A finite simplicial complex filtered by a height function.
///
/// Heights never decrease from a face to a coface, so every sublevel set is a
/// subcomplex. Each complex also carries the total order used by everything
/// downstream (reduction, pairing, contraction): simplices are ranked by
/// (height, dimension, tie-break), which guarantees that faces precede
/// cofaces. `build` derives the order with a lexicographic tie-break on
/// vertex lists; `build_ordered` takes the ranking as given, which is how a
/// contracted complex inherits its order from the source complex.
///
/// Instances are immutable once constructed and safe for concurrent reads.
class FilteredComplex {
 public:
  struct Entry {
    std::vector<VertexId> vertices;  // strictly increasing
    double height = 0.0;
  };

  FilteredComplex() = default;

  /// Validates and indexes a simplex list; ranks by (height, dim, lex).
  /// Throws DuplicateSimplexError, MissingFaceError, NonMonotoneHeightError.
  static FilteredComplex build(std::vector<Entry> entries);

  /// Same validation, but the entries arrive already in rank order and that
  /// order is kept. Heights and dimensions must be compatible with it.
  static FilteredComplex build_ordered(std::vector<Entry> entries);

  /// Extends vertex heights to the whole skeleton: each simplex gets the
  /// maximum height of its vertices. Throws UnknownVertexError for skeleton
  /// vertices without a height.
  static FilteredComplex lower_star(const std::map<VertexId, double>& vertex_heights,
                                    const std::vector<std::vector<VertexId>>& skeleton);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int dimension() const { return dim_; }

  /// Id lookup by vertex list; kNoSimplex when absent.
  SimplexId find(std::span<const VertexId> vertices) const;
  /// Like find, but throws UnknownSimplexError when absent.
  SimplexId require(std::span<const VertexId> vertices) const;
  /// The 0-simplex carrying vertex v; throws UnknownVertexError.
  SimplexId vertex_simplex(VertexId v) const;

  const std::vector<VertexId>& vertices_of(SimplexId s) const { return entries_[s].vertices; }
  int dim(SimplexId s) const { return static_cast<int>(entries_[s].vertices.size()) - 1; }
  double height(SimplexId s) const { return entries_[s].height; }
  const std::vector<SimplexId>& facets(SimplexId s) const { return facets_[s]; }
  const std::vector<SimplexId>& cofacets(SimplexId s) const { return cofacets_[s]; }

  std::size_t rank(SimplexId s) const { return rank_[s]; }
  SimplexId at_rank(std::size_t r) const { return order_[r]; }
  bool precedes(SimplexId s, SimplexId t) const { return rank_[s] < rank_[t]; }

  /// Ids of all p-simplices in rank order; empty for p outside [0, dim].
  const std::vector<SimplexId>& simplices_of_dim(int p) const;

  double max_height() const;

  /// Closure: the input set together with all faces, sorted by id.
  std::vector<SimplexId> closure(std::span<const SimplexId> s) const;
  /// Star: the input set together with all cofaces, sorted by id.
  std::vector<SimplexId> star(std::span<const SimplexId> s) const;
  /// lk(s) = cl(st(s)) \ st(cl(s)), sorted by id.
  std::vector<SimplexId> link(SimplexId s) const;
  /// All simplices of height <= a, in rank order (always a subcomplex).
  std::vector<SimplexId> sublevel(double a) const;

  /// Optional geometric payload for mesh output; not consulted by any
  /// topological operation.
  const std::map<VertexId, std::array<double, 3>>& positions() const { return positions_; }
  void set_positions(std::map<VertexId, std::array<double, 3>> p) { positions_ = std::move(p); }

 private:
  struct VertexListHash {
    std::size_t operator()(const std::vector<VertexId>& v) const;
  };

  static FilteredComplex assemble(std::vector<Entry> entries, std::vector<SimplexId> order);
  void check_order_invariants() const;

  std::vector<Entry> entries_;
  std::vector<std::vector<SimplexId>> facets_;
  std::vector<std::vector<SimplexId>> cofacets_;
  std::vector<SimplexId> order_;    // rank -> id
  std::vector<std::size_t> rank_;   // id -> rank
  std::vector<std::vector<SimplexId>> by_dim_;
  std::unordered_map<std::vector<VertexId>, SimplexId, VertexListHash> index_;
  int dim_ = -1;
  std::map<VertexId, std::array<double, 3>> positions_;
};

}  // namespace contracta

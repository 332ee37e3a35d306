#ifndef ORBITCOVER_NERVE_HPP
#define ORBITCOVER_NERVE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "orbitcover/covers.hpp"

namespace orbitcover {

/// A finite abstract simplicial complex on vertices 0..V-1 (V <= 64).
///
/// Simplices are stored as vertex bitmasks, grouped by dimension and sorted
/// lexicographically by their ascending vertex lists. Each vertex carries an
/// integer label; for nerves of orbit covers it is the member index.
class SimplicialComplex {
 public:
  using Simplex = std::vector<int>;
  static constexpr int kMaxVertices = 64;

  /// Downward closure of the given facets. Throws DomainError if a facet is
  /// empty or out of range, or if some vertex lies in no facet.
  static SimplicialComplex from_facets(std::vector<int> vertex_labels,
                                       const std::vector<Simplex>& facets);

  /// Throws DomainError unless the given set is downward closed and contains
  /// every vertex.
  static SimplicialComplex from_simplices(std::vector<int> vertex_labels,
                                          const std::vector<Simplex>& simplices);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& vertex_labels() const { return labels_; }

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t simplex_count() const { return lookup_.size(); }

  /// Number of simplices of each dimension 0..dim.
  std::vector<std::size_t> f_vector() const;

  /// Simplices of dimension d, ascending. Empty for d outside [0, dim].
  std::vector<Simplex> simplices(int d) const;
  std::vector<std::vector<Simplex>> simplices_by_dim() const;

  /// Simplices not contained in any other simplex, ascending by (dim, lex).
  std::vector<Simplex> facets() const;

  bool contains(const Simplex& s) const;
  bool contains_mask(std::uint64_t mask) const { return lookup_.count(mask) != 0; }
  const std::vector<std::vector<std::uint64_t>>& masks_by_dim() const { return by_dim_; }

  static std::uint64_t mask_of(const Simplex& s);
  static Simplex vertices_of(std::uint64_t mask);

 private:
  SimplicialComplex(std::vector<int> labels, std::unordered_set<std::uint64_t> simplices);

  std::vector<int> labels_;
  std::vector<std::vector<std::uint64_t>> by_dim_;
  std::unordered_set<std::uint64_t> lookup_;
};

/// Nerve of an indexed family of sets: J is a simplex iff the sets indexed by
/// J share an element. Vertex v is family[v] and is labelled labels[v]
/// (defaults to v).
SimplicialComplex build_nerve(const std::vector<Chord>& family,
                              std::vector<int> labels = {});

/// Nerve of an orbit cover over its distinct members; vertex labels are the
/// member indices of first appearance.
SimplicialComplex build_nerve(const OrbitCover& cover);

/// x -> Delta_x = { i : x in members[i] } for a primitive cover.
struct HarmonicRegions {
  std::map<int, SimplicialComplex::Simplex> regions;

  const SimplicialComplex::Simplex& at(int x) const { return regions.at(x); }
  std::size_t size() const { return regions.size(); }
};

/// Throws DomainError if the cover is not primitive.
HarmonicRegions harmonic_regions(const OrbitCover& cover);

}  // namespace orbitcover

#endif  // ORBITCOVER_NERVE_HPP

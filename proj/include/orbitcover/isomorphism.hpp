#ifndef ORBITCOVER_ISOMORPHISM_HPP
#define ORBITCOVER_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "orbitcover/nerve.hpp"

namespace orbitcover {

/// image[v] is the vertex of the second complex that v is sent to.
using VertexMap = std::vector<int>;

/// True iff `map` is a vertex bijection under which the simplex sets
/// correspond exactly. Checked simplex by simplex, in both directions.
bool is_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& map);

/// Exhaustive backtracking search for a simplicial isomorphism a -> b.
///
/// Vertices are matched only to vertices with the same star profile (number
/// of simplices of each dimension through the vertex); each partial
/// assignment must carry simplices to simplices and non-simplices to
/// non-simplices. A returned map has been re-verified with is_isomorphism().
std::optional<VertexMap> nerve_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace orbitcover

#endif  // ORBITCOVER_ISOMORPHISM_HPP

#ifndef ORBITCOVER_HOMOLOGY_HPP
#define ORBITCOVER_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "orbitcover/nerve.hpp"

namespace orbitcover {

/// Dense integer matrix, row major.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Nonzero diagonal of the Smith normal form, d_1 | d_2 | ... , all positive.
/// Throws std::overflow_error if an intermediate entry leaves int64 range.
std::vector<std::int64_t> invariant_factors(IntegerMatrix m);

/// The boundary map from dimension-d chains to dimension-(d-1) chains, with
/// rows and columns in the complex's simplex order and the sign of the face
/// that omits the j-th vertex equal to (-1)^j.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int d);

/// Components of the 1-skeleton, by union-find.
int connected_components(const SimplicialComplex& complex);

struct HomologyProfile {
  std::vector<std::int64_t> betti;                 // b_0 .. b_dim
  std::vector<std::vector<std::int64_t>> torsion;  // invariant factors > 1 of H_p
  std::int64_t euler_characteristic = 0;

  bool has_torsion() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integral simplicial homology (unreduced).
///
/// b_0 is cross-checked against connected_components() and the Euler
/// characteristic of the f-vector against the alternating Betti sum; a
/// mismatch throws std::logic_error.
HomologyProfile homology(const SimplicialComplex& complex);

}  // namespace orbitcover

#endif  // ORBITCOVER_HOMOLOGY_HPP

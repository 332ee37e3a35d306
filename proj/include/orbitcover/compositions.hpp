#ifndef ORBITCOVER_COMPOSITIONS_HPP
#define ORBITCOVER_COMPOSITIONS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace orbitcover {

/// An ordered tuple of positive step intervals (i_1, ..., i_k) with sum n,
/// i.e. an element of Sigma(n, k).
class IntervalComposition {
 public:
  /// Throws DomainError if parts is empty or some part is < 1.
  explicit IntervalComposition(std::vector<int> parts);

  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int j) const { return parts_[j]; }

  /// S_0 = 0, S_1, ..., S_k = n.
  std::vector<int> partial_sums() const;

  /// "(i1,i2,...,ik)"
  std::string to_string() const;

  friend bool operator==(const IntervalComposition&, const IntervalComposition&) = default;
  friend auto operator<=>(const IntervalComposition& a, const IntervalComposition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All of Sigma(n, k) in lexicographic order; C(n-1, k-1) entries.
/// Throws DomainError unless 1 <= k <= n.
std::vector<IntervalComposition> enumerate_compositions(int n, int k);

/// Cyclic left rotation by i positions (i is read mod k).
IntervalComposition rotate(const IntervalComposition& sigma, int i);

/// Lexicographically least rotation.
IntervalComposition canonical_rotation(const IntervalComposition& sigma);

struct RotationClass {
  IntervalComposition representative;
  std::vector<IntervalComposition> members;  // distinct rotations, ascending

  bool contains(const IntervalComposition& sigma) const;
  /// "[(…)]"
  std::string to_string() const;

  friend bool operator==(const RotationClass& a, const RotationClass& b) {
    return a.representative == b.representative;
  }
};

RotationClass rotation_class(const IntervalComposition& sigma);

/// Sigma(n, k) partitioned into rotation orbits, sorted by representative.
std::vector<RotationClass> rotation_classes(int n, int k);

/// The u-transform u * sigma: scale the partial sums by u mod n, sort them,
/// and take successive differences. Throws DomainError unless gcd(u, n) = 1.
IntervalComposition u_transform(const IntervalComposition& sigma, int u);

/// Representative of the rotation class of u * sigma.
IntervalComposition act_on_class(const IntervalComposition& sigma, int u);

struct UnitWitness {
  IntervalComposition from;  // class representatives
  IntervalComposition to;
  int unit;  // least u in Z_n^x with u * from in [to]
};

struct AffineOrbit {
  std::vector<RotationClass> classes;  // ascending by representative
  std::vector<UnitWitness> witnesses;  // every ordered pair of distinct classes

  bool contains(const IntervalComposition& sigma) const;
};

/// Rotation classes of Sigma(n, k) grouped under the Z_n^x action, sorted by
/// least representative.
std::vector<AffineOrbit> affine_orbits(int n, int k);

/// True iff beta is in the rotation class of u * alpha for some unit u.
/// Compositions from different Sigma(n, k) are never related.
bool affinely_related(const IntervalComposition& alpha, const IntervalComposition& beta);

/// The least unit u with u * alpha in [beta], if any.
std::optional<int> relating_unit(const IntervalComposition& alpha, const IntervalComposition& beta);

}  // namespace orbitcover

#endif  // ORBITCOVER_COMPOSITIONS_HPP

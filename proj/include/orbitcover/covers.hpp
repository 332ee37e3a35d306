#ifndef ORBITCOVER_COVERS_HPP
#define ORBITCOVER_COVERS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "orbitcover/compositions.hpp"
#include "orbitcover/scale_core.hpp"

namespace orbitcover {

/// A nonempty set of pitch classes, kept in ascending order.
class Chord {
 public:
  /// Sorts and deduplicates. Throws DomainError if empty.
  explicit Chord(std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const;
  bool is_subset_of(const Chord& other) const;

  /// "{0,4,7}"
  std::string to_string() const;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord& a, const Chord& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<int> elements_;
};

/// Pitch classes common to both chords, ascending.
std::vector<int> common_tones(const Chord& a, const Chord& b);

/// sigma(x) = { T_{S_b}(x) : 0 <= b < k }.
/// Throws DomainError if sigma.n() != |scale|, MembershipError if x is not
/// in the scale.
Chord realize(const IntervalComposition& sigma, const Scale& scale, int x);

/// X^(sigma) rooted at `root`: members[i] = sigma(T_i(root)) for i in Z_n.
class OrbitCover {
 public:
  OrbitCover(Scale scale, IntervalComposition sigma, int root);

  const Scale& scale() const { return scale_; }
  const IntervalComposition& sigma() const { return sigma_; }
  int root() const { return root_; }
  const Chord& generator() const { return members_.front(); }

  /// Indexed by Z_n; may repeat for non-primitive covers.
  const std::vector<Chord>& members() const { return members_; }
  const Chord& member(long long i) const;

  /// Members with duplicates removed, in order of first appearance.
  const std::vector<Chord>& distinct_members() const { return distinct_; }
  /// Index of the first appearance of each distinct member.
  const std::vector<int>& distinct_indices() const { return distinct_index_; }

  /// gcd(n, |generator|) == 1.
  bool is_primitive() const;

 private:
  Scale scale_;
  IntervalComposition sigma_;
  int root_;
  std::vector<Chord> members_;
  std::vector<Chord> distinct_;
  std::vector<int> distinct_index_;
};

OrbitCover orbit_cover(const Scale& scale, const IntervalComposition& sigma, int root);

bool is_primitive(const OrbitCover& cover);

/// (f, phi): f(U_i) must lie inside V_{phi(i)} for every source index i.
struct CoverMorphism {
  ScaleHom scale_map;
  std::vector<int> index_map;
};

CoverMorphism identity_morphism(const OrbitCover& cover);

bool verify_cover_morphism(const CoverMorphism& morphism, const OrbitCover& source,
                           const OrbitCover& target);

/// Result of carrying an orbit cover along an affine map of degree
/// coordinates.
struct CoverTransport {
  OrbitCover cover;         // u_transform(sigma, u) rooted at f(root)
  ScaleHom pointwise;       // the element-level bijection f
  std::vector<int> index_map;  // source member i -> target member u*i

  CoverMorphism morphism() const { return CoverMorphism{pointwise, index_map}; }
};

/// Applies j -> u*j + v to degree coordinates. Source degrees count steps
/// from cover.root(); target degrees count steps from target_origin, which
/// defaults to the tonic of the target's mode 0 (the head of its normal
/// order). Throws DomainError if u is not a unit or the sizes differ.
CoverTransport transport_cover(const OrbitCover& cover, int u, int v, const Scale& target,
                               std::optional<int> target_origin = std::nullopt);

/// Members visited from `start` in strides of `step`, `count` chords long.
std::vector<Chord> chord_progression(const OrbitCover& cover, int start, int step, int count);

}  // namespace orbitcover

#endif  // ORBITCOVER_COVERS_HPP

#ifndef ORBITCOVER_SCALE_CORE_HPP
#define ORBITCOVER_SCALE_CORE_HPP

#include <map>
#include <vector>

namespace orbitcover {

/// A nonempty subset of the chromatic universe Z_N.
///
/// Elements are stored in ascending residue order; two sets are equal iff
/// they have the same universe and the same elements. The normal order is
/// computed on demand.
class PitchClassSet {
 public:
  /// Throws DomainError if N < 1, the element list is empty, an element lies
  /// outside [0, N), or an element is repeated.
  PitchClassSet(int universe, std::vector<int> elements);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int x) const;

  /// The most compact rotation of the ascending circular ordering.
  ///
  /// Rotations are compared by circular span (last - first mod N), then by
  /// the vector of intervals measured from the first element, then by the
  /// first residue. C major {0,2,4,5,7,9,11} gives (11,0,2,4,5,7,9).
  std::vector<int> normal_order() const;

  friend bool operator==(const PitchClassSet&, const PitchClassSet&) = default;

 private:
  int universe_;
  std::vector<int> elements_;
};

std::vector<int> normal_order(const PitchClassSet& pcs);

/// The (i+1)th mode of a pitch-class set: the group (X, +) transported from
/// Z_n along the degree map mu_i = T_i o mu, where mu numbers the normal
/// order 0..n-1.
class Mode {
 public:
  /// Throws RangeError unless 0 <= mode_index < n.
  Mode(PitchClassSet base, int mode_index);

  const PitchClassSet& base() const { return base_; }
  int mode_index() const { return index_; }
  int size() const { return base_.size(); }
  const std::vector<int>& normal_order() const { return order_; }

  /// mu_i(x). Throws MembershipError if x is not in the base set.
  int degree(int x) const;
  /// mu_i^{-1}(d), with d read mod n.
  int element_at(long long degree) const;
  int tonic() const { return element_at(0); }

  /// x (+) y = mu_i^{-1}(mu_i(x) + mu_i(y)).
  int add(int x, int y) const;
  int negate(int x) const;

  /// Element -> degree, ascending by element.
  std::map<int, int> degree_map() const;

  friend bool operator==(const Mode& a, const Mode& b) {
    return a.base_ == b.base_ && a.index_ == b.index_;
  }

 private:
  PitchClassSet base_;
  int index_;
  std::vector<int> order_;
  std::vector<int> position_;  // indexed by residue, -1 for non-members
};

Mode build_mode(const PitchClassSet& pcs, int mode_index);

/// The unique mode index whose tonic is t.
int mode_index_for_tonic(const PitchClassSet& pcs, int tonic);

int mode_add(const Mode& mode, int x, int y);

/// A pitch-class set as a Z_n-torsor: tau(g, x) is the element g scalar
/// steps above x. The action is the same whichever mode it is read through;
/// the mode kept here only supplies coordinates.
class Scale {
 public:
  explicit Scale(PitchClassSet base);
  explicit Scale(Mode chart);

  const PitchClassSet& base() const { return chart_.base(); }
  int size() const { return chart_.size(); }
  const Mode& chart() const { return chart_; }

  /// tau(g, x). Throws MembershipError if x is not in the base set.
  int translate(long long steps, int x) const;
  /// The unique g in Z_n with tau(g, from) = to.
  int steps_between(int from, int to) const;

  /// Scales are equal when their torsors are, i.e. when the bases agree.
  friend bool operator==(const Scale& a, const Scale& b) {
    return a.base() == b.base();
  }

 private:
  Mode chart_;
};

int translate(const Scale& scale, long long steps, int x);

/// phi: (X, +_i) -> (X', +_i') induced by phihat(j) = a*j mod n'.
///
/// Homomorphisms built by mode_hom() carry a = n' / gcd(n, n'). Composites
/// carry the product of their factors' multipliers.
struct ModeHom {
  Mode source;
  Mode target;
  int multiplier;
  std::map<int, int> map;

  int operator()(int x) const;
  int on_degrees(long long j) const;
};

ModeHom mode_hom(const Mode& source, const Mode& target);
ModeHom identity_hom(const Mode& mode);
/// second o first. Throws DomainError unless first.target == second.source.
ModeHom compose(const ModeHom& second, const ModeHom& first);
/// a*n == 0 mod n' and mu_i'(phi(x)) == a*mu_i(x) mod n' for every x.
bool commutes(const ModeHom& hom);

/// A torsor map (phi, phihat) between scales, written in the coordinates of
/// the source mode i and target mode i':
///   mu_i'(phi(x)) = multiplier * mu_i(x) + offset  (mod n').
///
/// scale_hom() gives the maps with multiplier n'/gcd(n, n') and offset 0.
/// affine_scale_map() gives maps with an arbitrary multiplier and offset,
/// which is what transporting covers along u*x + v needs.
struct ScaleHom {
  Scale source;
  Scale target;
  int source_mode_index;
  int target_mode_index;
  int multiplier;
  int offset;
  std::map<int, int> map;

  int operator()(int x) const;
  int on_steps(long long g) const;
};

ScaleHom scale_hom(const Scale& source, const Scale& target, int source_mode_index,
                   int target_mode_index);
ScaleHom identity_hom(const Scale& scale);

/// x -> the element at target degree u*d(x) + v, where d counts steps from
/// source_origin and target degrees count steps from target_origin.
/// Throws DomainError if u*n != 0 mod n' (phihat would not be well defined).
ScaleHom affine_scale_map(const Scale& source, const Scale& target, int source_origin,
                          int target_origin, int u, int v);

ScaleHom compose(const ScaleHom& second, const ScaleHom& first);

/// phi(tau(g, x)) == tau'(phihat(g), phi(x)) for every g and x.
bool is_equivariant(const ScaleHom& hom);

}  // namespace orbitcover

#endif  // ORBITCOVER_SCALE_CORE_HPP

#include "orbitcover/covers.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "orbitcover/errors.hpp"
#include "orbitcover/modular.hpp"

namespace orbitcover {

Chord::Chord(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("chord must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Chord::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Chord::is_subset_of(const Chord& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::string Chord::to_string() const {
  std::string out = "{";
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(elements_[j]);
  }
  return out + "}";
}

std::vector<int> common_tones(const Chord& a, const Chord& b) {
  std::vector<int> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return out;
}

Chord realize(const IntervalComposition& sigma, const Scale& scale, int x) {
  if (sigma.n() != scale.size()) {
    throw DomainError("composition " + sigma.to_string() + " sums to " +
                      std::to_string(sigma.n()) + " but the scale has " +
                      std::to_string(scale.size()) + " elements");
  }
  const auto sums = sigma.partial_sums();
  std::vector<int> elements;
  elements.reserve(sigma.k());
  for (int b = 0; b < sigma.k(); ++b) elements.push_back(scale.translate(sums[b], x));
  return Chord(std::move(elements));
}

OrbitCover::OrbitCover(Scale scale, IntervalComposition sigma, int root)
    : scale_(std::move(scale)), sigma_(std::move(sigma)), root_(root) {
  const int n = scale_.size();
  members_.reserve(n);
  for (int i = 0; i < n; ++i) members_.push_back(realize(sigma_, scale_, scale_.translate(i, root_)));
  for (int i = 0; i < n; ++i) {
    if (std::find(distinct_.begin(), distinct_.end(), members_[i]) == distinct_.end()) {
      distinct_.push_back(members_[i]);
      distinct_index_.push_back(i);
    }
  }
}

const Chord& OrbitCover::member(long long i) const { return members_[mod(i, scale_.size())]; }

bool OrbitCover::is_primitive() const { return std::gcd(scale_.size(), generator().size()) == 1; }

OrbitCover orbit_cover(const Scale& scale, const IntervalComposition& sigma, int root) {
  return OrbitCover(scale, sigma, root);
}

bool is_primitive(const OrbitCover& cover) { return cover.is_primitive(); }

CoverMorphism identity_morphism(const OrbitCover& cover) {
  std::vector<int> index(cover.members().size());
  std::iota(index.begin(), index.end(), 0);
  return CoverMorphism{identity_hom(cover.scale()), std::move(index)};
}

bool verify_cover_morphism(const CoverMorphism& morphism, const OrbitCover& source,
                           const OrbitCover& target) {
  const auto& f = morphism.scale_map;
  if (!(f.source == source.scale()) || !(f.target == target.scale())) return false;
  if (morphism.index_map.size() != source.members().size()) return false;
  const int target_count = static_cast<int>(target.members().size());
  for (std::size_t i = 0; i < source.members().size(); ++i) {
    const int j = morphism.index_map[i];
    if (j < 0 || j >= target_count) return false;
    const Chord& into = target.members()[j];
    for (int x : source.members()[i].elements()) {
      if (!into.contains(f(x))) return false;
    }
  }
  return true;
}

CoverTransport transport_cover(const OrbitCover& cover, int u, int v, const Scale& target,
                               std::optional<int> target_origin) {
  const int n = cover.scale().size();
  if (target.size() != n) {
    throw DomainError("transport needs scales of equal size, got " + std::to_string(n) + " and " +
                      std::to_string(target.size()));
  }
  if (!is_unit(u, n)) {
    throw DomainError(std::to_string(u) + " is not a unit mod " + std::to_string(n));
  }
  const int origin = target_origin.value_or(target.base().normal_order().front());
  ScaleHom f = affine_scale_map(cover.scale(), target, cover.root(), origin, u, v);
  OrbitCover image(target, u_transform(cover.sigma(), u), f(cover.root()));

  // f o T_i = T_{ui} o f sends member i to member u*i of the rooted image.
  std::vector<int> index_map(n);
  for (int i = 0; i < n; ++i) index_map[i] = mod(static_cast<long long>(f.multiplier) * i, n);
  return CoverTransport{std::move(image), std::move(f), std::move(index_map)};
}

std::vector<Chord> chord_progression(const OrbitCover& cover, int start, int step, int count) {
  std::vector<Chord> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    out.push_back(cover.member(static_cast<long long>(start) + static_cast<long long>(j) * step));
  }
  return out;
}

}  // namespace orbitcover

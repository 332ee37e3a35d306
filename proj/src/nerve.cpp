#include "orbitcover/nerve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "orbitcover/errors.hpp"

namespace orbitcover {

namespace {

// Ascending vertex lists compared lexicographically.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int va = std::countr_zero(a);
    const int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void check_vertex_count(std::size_t count) {
  if (count == 0) throw DomainError("simplicial complex needs at least one vertex");
  if (count > static_cast<std::size_t>(SimplicialComplex::kMaxVertices)) {
    throw DomainError("simplicial complexes are limited to 64 vertices");
  }
}

void close_downward(std::uint64_t facet, std::unordered_set<std::uint64_t>& out) {
  if (!out.insert(facet).second) return;
  for (std::uint64_t rest = facet; rest; rest &= rest - 1) {
    const std::uint64_t face = facet & ~(rest & -rest);
    if (face) close_downward(face, out);
  }
}

}  // namespace

std::uint64_t SimplicialComplex::mask_of(const Simplex& s) {
  std::uint64_t mask = 0;
  for (int v : s) {
    if (v < 0 || v >= kMaxVertices) {
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    }
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

SimplicialComplex::Simplex SimplicialComplex::vertices_of(std::uint64_t mask) {
  Simplex out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

SimplicialComplex::SimplicialComplex(std::vector<int> labels,
                                     std::unordered_set<std::uint64_t> simplices)
    : labels_(std::move(labels)), lookup_(std::move(simplices)) {
  for (std::uint64_t s : lookup_) {
    const auto d = static_cast<std::size_t>(std::popcount(s) - 1);
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
  }
  for (auto& level : by_dim_) std::sort(level.begin(), level.end(), lex_less);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertex_labels,
                                                 const std::vector<Simplex>& facets) {
  check_vertex_count(vertex_labels.size());
  const auto count = static_cast<int>(vertex_labels.size());
  std::unordered_set<std::uint64_t> simplices;
  for (const auto& facet : facets) {
    if (facet.empty()) throw DomainError("empty facet");
    for (int v : facet) {
      if (v < 0 || v >= count) throw DomainError("facet vertex " + std::to_string(v) + " out of range");
    }
    close_downward(mask_of(facet), simplices);
  }
  for (int v = 0; v < count; ++v) {
    if (!simplices.count(std::uint64_t{1} << v)) {
      throw DomainError("vertex " + std::to_string(v) + " lies in no simplex");
    }
  }
  return SimplicialComplex(std::move(vertex_labels), std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<int> vertex_labels,
                                                    const std::vector<Simplex>& simplices) {
  check_vertex_count(vertex_labels.size());
  const auto count = static_cast<int>(vertex_labels.size());
  std::unordered_set<std::uint64_t> set;
  for (const auto& s : simplices) {
    if (s.empty()) throw DomainError("empty simplex");
    for (int v : s) {
      if (v < 0 || v >= count) throw DomainError("vertex " + std::to_string(v) + " out of range");
    }
    set.insert(mask_of(s));
  }
  for (std::uint64_t s : set) {
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const std::uint64_t face = s & ~(rest & -rest);
      if (face && !set.count(face)) throw DomainError("simplex set is not downward closed");
    }
  }
  for (int v = 0; v < count; ++v) {
    if (!set.count(std::uint64_t{1} << v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not a 0-simplex");
    }
  }
  return SimplicialComplex(std::move(vertex_labels), std::move(set));
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_dim_) out.push_back(level.size());
  return out;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::simplices(int d) const {
  std::vector<Simplex> out;
  if (d < 0 || d > dimension()) return out;
  for (std::uint64_t s : by_dim_[d]) out.push_back(vertices_of(s));
  return out;
}

std::vector<std::vector<SimplicialComplex::Simplex>> SimplicialComplex::simplices_by_dim() const {
  std::vector<std::vector<Simplex>> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(simplices(d));
  return out;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (std::uint64_t s : by_dim_[d]) {
      bool maximal = true;
      for (int v = 0; v < vertex_count() && maximal; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (!(s & bit) && lookup_.count(s | bit)) maximal = false;
      }
      if (maximal) out.push_back(vertices_of(s));
    }
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  for (int v : s) {
    if (v < 0 || v >= vertex_count()) return false;
  }
  return contains_mask(mask_of(s));
}

SimplicialComplex build_nerve(const std::vector<Chord>& family, std::vector<int> labels) {
  check_vertex_count(family.size());
  if (labels.empty()) {
    labels.resize(family.size());
    std::iota(labels.begin(), labels.end(), 0);
  }
  if (labels.size() != family.size()) throw DomainError("one label per cover member required");

  // Every simplex is a face of some membership set {j : x in C_j}.
  std::set<int> ground;
  for (const auto& c : family) ground.insert(c.elements().begin(), c.elements().end());
  std::vector<SimplicialComplex::Simplex> facets;
  for (int x : ground) {
    SimplicialComplex::Simplex membership;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(x)) membership.push_back(static_cast<int>(j));
    }
    facets.push_back(std::move(membership));
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

SimplicialComplex build_nerve(const OrbitCover& cover) {
  return build_nerve(cover.distinct_members(), cover.distinct_indices());
}

HarmonicRegions harmonic_regions(const OrbitCover& cover) {
  if (!cover.is_primitive()) {
    throw DomainError("harmonic regions are defined for primitive covers only");
  }
  HarmonicRegions out;
  const auto& members = cover.members();
  for (int x : cover.scale().base().elements()) {
    SimplicialComplex::Simplex region;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].contains(x)) region.push_back(static_cast<int>(i));
    }
    out.regions.emplace(x, std::move(region));
  }
  return out;
}

}  // namespace orbitcover

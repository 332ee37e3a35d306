#include "orbitcover/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace orbitcover {

namespace {

using Profile = std::vector<std::size_t>;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<Profile> star_profiles(const SimplicialComplex& c) {
  std::vector<Profile> out(c.vertex_count(), Profile(c.dimension() + 1, 0));
  const auto& masks = c.masks_by_dim();
  for (std::size_t d = 0; d < masks.size(); ++d) {
    for (std::uint64_t s : masks[d]) {
      for (std::uint64_t rest = s; rest; rest &= rest - 1) ++out[std::countr_zero(rest)][d];
    }
  }
  return out;
}

class Search {
 public:
  Search(const SimplicialComplex& a, const SimplicialComplex& b)
      : a_(a), b_(b), profile_a_(star_profiles(a)), profile_b_(star_profiles(b)),
        image_(a.vertex_count(), -1), used_(b.vertex_count(), false) {}

  bool profiles_match() const {
    auto pa = profile_a_;
    auto pb = profile_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  }

  std::optional<VertexMap> run() {
    plan_order();
    if (assign(0)) return image_;
    return std::nullopt;
  }

 private:
  // Rarest profile first, then always the vertex with most edges into the
  // already-ordered prefix, so adjacency constraints bite early.
  void plan_order() {
    std::map<Profile, int> frequency;
    for (const auto& p : profile_a_) ++frequency[p];
    const int count = a_.vertex_count();
    std::vector<bool> placed(count, false);
    for (int step = 0; step < count; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < count; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += a_.contains_mask(bit(u) | bit(v)) ? 1 : 0;
        if (links > best_links ||
            (links == best_links && frequency[profile_a_[v]] < frequency[profile_a_[best]])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  // Simplices of a inside the assigned prefix that contain the newest
  // vertex must map to simplices of b; `found` counts them.
  bool forward(std::uint64_t sa, std::uint64_t sb, std::size_t from, std::size_t depth,
               std::size_t& found) const {
    for (std::size_t idx = from; idx < depth; ++idx) {
      const int u = order_[idx];
      const std::uint64_t na = sa | bit(u);
      if (!a_.contains_mask(na)) continue;
      const std::uint64_t nb = sb | bit(image_[u]);
      if (!b_.contains_mask(nb)) return false;
      ++found;
      if (!forward(na, nb, idx + 1, depth, found)) return false;
    }
    return true;
  }

  void count_backward(std::uint64_t sb, std::size_t from, std::size_t depth,
                      std::size_t& found) const {
    for (std::size_t idx = from; idx < depth; ++idx) {
      const std::uint64_t nb = sb | bit(image_[order_[idx]]);
      if (!b_.contains_mask(nb)) continue;
      ++found;
      count_backward(nb, idx + 1, depth, found);
    }
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || profile_b_[w] != profile_a_[v]) continue;
      image_[v] = w;
      used_[w] = true;
      std::size_t ahead = 0;
      std::size_t behind = 0;
      if (forward(bit(v), bit(w), 0, depth, ahead)) {
        count_backward(bit(w), 0, depth, behind);
        // Injectivity makes the forward image a subset of b's simplices
        // through w, so equal counts mean the correspondence is exact.
        if (ahead == behind && assign(depth + 1)) return true;
      }
      used_[w] = false;
      image_[v] = -1;
    }
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  std::vector<Profile> profile_a_;
  std::vector<Profile> profile_b_;
  std::vector<int> order_;
  VertexMap image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& map) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (map.size() != static_cast<std::size_t>(a.vertex_count())) return false;
  std::vector<bool> hit(b.vertex_count(), false);
  for (int w : map) {
    if (w < 0 || w >= b.vertex_count() || hit[w]) return false;
    hit[w] = true;
  }
  if (a.simplex_count() != b.simplex_count()) return false;
  for (const auto& level : a.masks_by_dim()) {
    for (std::uint64_t s : level) {
      std::uint64_t image = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) image |= bit(map[std::countr_zero(rest)]);
      if (!b.contains_mask(image)) return false;
    }
  }
  // Injective on simplices with equal totals, hence onto.
  return true;
}

std::optional<VertexMap> nerve_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.f_vector() != b.f_vector()) return std::nullopt;
  VertexMap identity(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) identity[v] = v;
  if (is_isomorphism(a, b, identity)) return identity;
  Search search(a, b);
  if (!search.profiles_match()) return std::nullopt;
  auto found = search.run();
  if (found && !is_isomorphism(a, b, *found)) {
    throw std::logic_error("isomorphism search produced an invalid witness");
  }
  return found;
}

}  // namespace orbitcover

#include "orbitcover/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbitcover/errors.hpp"
#include "orbitcover/modular.hpp"

namespace orbitcover {

IntervalComposition::IntervalComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("interval composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw DomainError("interval composition parts must be positive");
    n_ += p;
  }
}

std::vector<int> IntervalComposition::partial_sums() const {
  std::vector<int> sums(parts_.size() + 1, 0);
  std::partial_sum(parts_.begin(), parts_.end(), sums.begin() + 1);
  return sums;
}

std::string IntervalComposition::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out + ")";
}

namespace {

void check_nk(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Lexicographic order on compositions is lexicographic order on the cut
// points S_1 < ... < S_{k-1}, so walking cut sets in lex order suffices.
void walk_cuts(int n, int k, std::vector<int>& cuts, std::vector<IntervalComposition>& out) {
  const int placed = static_cast<int>(cuts.size());
  if (placed == k - 1) {
    std::vector<int> parts;
    parts.reserve(k);
    int prev = 0;
    for (int c : cuts) {
      parts.push_back(c - prev);
      prev = c;
    }
    parts.push_back(n - prev);
    out.emplace_back(std::move(parts));
    return;
  }
  const int lo = placed == 0 ? 1 : cuts.back() + 1;
  const int remaining = k - 1 - placed;
  for (int c = lo; c <= n - remaining; ++c) {
    cuts.push_back(c);
    walk_cuts(n, k, cuts, out);
    cuts.pop_back();
  }
}

}  // namespace

std::vector<IntervalComposition> enumerate_compositions(int n, int k) {
  check_nk(n, k);
  std::vector<IntervalComposition> out;
  std::vector<int> cuts;
  cuts.reserve(k);
  walk_cuts(n, k, cuts, out);
  return out;
}

IntervalComposition rotate(const IntervalComposition& sigma, int i) {
  std::vector<int> parts = sigma.parts();
  std::rotate(parts.begin(), parts.begin() + mod(i, sigma.k()), parts.end());
  return IntervalComposition(std::move(parts));
}

IntervalComposition canonical_rotation(const IntervalComposition& sigma) {
  IntervalComposition best = sigma;
  for (int i = 1; i < sigma.k(); ++i) best = std::min(best, rotate(sigma, i));
  return best;
}

bool RotationClass::contains(const IntervalComposition& sigma) const {
  return std::binary_search(members.begin(), members.end(), sigma);
}

std::string RotationClass::to_string() const { return "[" + representative.to_string() + "]"; }

RotationClass rotation_class(const IntervalComposition& sigma) {
  std::vector<IntervalComposition> members;
  for (int i = 0; i < sigma.k(); ++i) members.push_back(rotate(sigma, i));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IntervalComposition rep = members.front();
  return RotationClass{std::move(rep), std::move(members)};
}

std::vector<RotationClass> rotation_classes(int n, int k) {
  std::vector<RotationClass> out;
  for (const auto& sigma : enumerate_compositions(n, k)) {
    if (canonical_rotation(sigma) == sigma) out.push_back(rotation_class(sigma));
  }
  return out;
}

IntervalComposition u_transform(const IntervalComposition& sigma, int u) {
  const int n = sigma.n();
  if (!is_unit(u, n)) {
    throw DomainError(std::to_string(u) + " is not a unit mod " + std::to_string(n));
  }
  const auto sums = sigma.partial_sums();
  std::vector<int> scaled;
  scaled.reserve(sums.size());
  for (int b = 0; b < sigma.k(); ++b) scaled.push_back(mod(static_cast<long long>(u) * sums[b], n));
  std::sort(scaled.begin(), scaled.end());
  scaled.push_back(n);
  std::vector<int> parts;
  parts.reserve(sigma.k());
  for (int j = 1; j <= sigma.k(); ++j) parts.push_back(scaled[j] - scaled[j - 1]);
  return IntervalComposition(std::move(parts));
}

IntervalComposition act_on_class(const IntervalComposition& sigma, int u) {
  return canonical_rotation(u_transform(sigma, u));
}

bool AffineOrbit::contains(const IntervalComposition& sigma) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const RotationClass& c) { return c.contains(sigma); });
}

std::vector<AffineOrbit> affine_orbits(int n, int k) {
  auto classes = rotation_classes(n, k);
  const auto unit_list = units(n);

  std::map<IntervalComposition, std::size_t> index;
  for (std::size_t c = 0; c < classes.size(); ++c) index.emplace(classes[c].representative, c);

  // image[c][j] = class of unit_list[j] * classes[c]
  std::vector<std::vector<std::size_t>> image(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int u : unit_list) image[c].push_back(index.at(act_on_class(classes[c].representative, u)));
  }

  std::vector<int> orbit_of(classes.size(), -1);
  std::vector<AffineOrbit> orbits;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (orbit_of[c] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    // Z_n^x is a group, so one application of every unit reaches the whole orbit.
    std::vector<std::size_t> members;
    for (std::size_t target : image[c]) {
      if (orbit_of[target] < 0) {
        orbit_of[target] = id;
        members.push_back(target);
      }
    }
    std::sort(members.begin(), members.end());

    AffineOrbit orbit;
    for (std::size_t m : members) orbit.classes.push_back(classes[m]);
    for (std::size_t a : members) {
      for (std::size_t b : members) {
        if (a == b) continue;
        for (std::size_t j = 0; j < unit_list.size(); ++j) {
          if (image[a][j] == b) {
            orbit.witnesses.push_back(
                UnitWitness{classes[a].representative, classes[b].representative, unit_list[j]});
            break;
          }
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::optional<int> relating_unit(const IntervalComposition& alpha,
                                 const IntervalComposition& beta) {
  if (alpha.n() != beta.n() || alpha.k() != beta.k()) return std::nullopt;
  const auto target = canonical_rotation(beta);
  for (int u : units(alpha.n())) {
    if (act_on_class(alpha, u) == target) return u;
  }
  return std::nullopt;
}

bool affinely_related(const IntervalComposition& alpha, const IntervalComposition& beta) {
  return relating_unit(alpha, beta).has_value();
}

}  // namespace orbitcover

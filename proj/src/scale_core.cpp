#include "orbitcover/scale_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "orbitcover/errors.hpp"
#include "orbitcover/modular.hpp"

namespace orbitcover {

PitchClassSet::PitchClassSet(int universe, std::vector<int> elements)
    : universe_(universe), elements_(std::move(elements)) {
  if (universe_ < 1) {
    throw DomainError("universe size must be positive, got " + std::to_string(universe_));
  }
  if (elements_.empty()) {
    throw DomainError("pitch-class set must be nonempty");
  }
  for (int e : elements_) {
    if (e < 0 || e >= universe_) {
      throw DomainError("residue " + std::to_string(e) + " outside Z_" +
                        std::to_string(universe_));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw DomainError("pitch-class set has repeated elements");
  }
}

bool PitchClassSet::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<int> PitchClassSet::normal_order() const {
  const int n = size();
  auto key = [&](int start) {
    std::vector<int> intervals;
    intervals.reserve(n);
    const int first = elements_[start];
    for (int j = 1; j < n; ++j) {
      intervals.push_back(mod(elements_[(start + j) % n] - first, universe_));
    }
    const int span = intervals.empty() ? 0 : intervals.back();
    return std::make_tuple(span, std::move(intervals), first);
  };

  int best = 0;
  auto best_key = key(0);
  for (int start = 1; start < n; ++start) {
    auto k = key(start);
    if (k < best_key) {
      best = start;
      best_key = std::move(k);
    }
  }

  std::vector<int> order;
  order.reserve(n);
  for (int j = 0; j < n; ++j) order.push_back(elements_[(best + j) % n]);
  return order;
}

std::vector<int> normal_order(const PitchClassSet& pcs) { return pcs.normal_order(); }

Mode::Mode(PitchClassSet base, int mode_index)
    : base_(std::move(base)), index_(mode_index), order_(base_.normal_order()),
      position_(base_.universe(), -1) {
  if (index_ < 0 || index_ >= base_.size()) {
    throw RangeError("mode index " + std::to_string(index_) + " outside [0, " +
                     std::to_string(base_.size()) + ")");
  }
  for (int p = 0; p < size(); ++p) position_[order_[p]] = p;
}

int Mode::degree(int x) const {
  if (x < 0 || x >= base_.universe() || position_[x] < 0) {
    throw MembershipError("pitch class " + std::to_string(x) + " is not in the set");
  }
  return mod(position_[x] + index_, size());
}

int Mode::element_at(long long degree) const {
  return order_[mod(degree - index_, size())];
}

int Mode::add(int x, int y) const {
  return element_at(static_cast<long long>(degree(x)) + degree(y));
}

int Mode::negate(int x) const { return element_at(-static_cast<long long>(degree(x))); }

std::map<int, int> Mode::degree_map() const {
  std::map<int, int> out;
  for (int x : base_.elements()) out.emplace(x, degree(x));
  return out;
}

Mode build_mode(const PitchClassSet& pcs, int mode_index) { return Mode(pcs, mode_index); }

int mode_index_for_tonic(const PitchClassSet& pcs, int tonic) {
  // mu(t) + i == 0 mod n.
  const Mode reference(pcs, 0);
  return mod(-static_cast<long long>(reference.degree(tonic)), pcs.size());
}

int mode_add(const Mode& mode, int x, int y) { return mode.add(x, y); }

Scale::Scale(PitchClassSet base) : chart_(std::move(base), 0) {}

Scale::Scale(Mode chart) : chart_(std::move(chart)) {}

int Scale::translate(long long steps, int x) const {
  return chart_.element_at(steps + chart_.degree(x));
}

int Scale::steps_between(int from, int to) const {
  return mod(chart_.degree(to) - chart_.degree(from), size());
}

int translate(const Scale& scale, long long steps, int x) { return scale.translate(steps, x); }

namespace {

int lookup(const std::map<int, int>& table, int x) {
  auto it = table.find(x);
  if (it == table.end()) {
    throw MembershipError("pitch class " + std::to_string(x) + " is not in the source set");
  }
  return it->second;
}

}  // namespace

int ModeHom::operator()(int x) const { return lookup(map, x); }

int ModeHom::on_degrees(long long j) const {
  return mod(static_cast<long long>(multiplier) * mod(j, source.size()), target.size());
}

ModeHom mode_hom(const Mode& source, const Mode& target) {
  const int n = source.size();
  const int n_prime = target.size();
  ModeHom hom{source, target, n_prime / std::gcd(n, n_prime), {}};
  for (int x : source.base().elements()) {
    hom.map.emplace(x, target.element_at(hom.on_degrees(source.degree(x))));
  }
  return hom;
}

ModeHom identity_hom(const Mode& mode) { return mode_hom(mode, mode); }

ModeHom compose(const ModeHom& second, const ModeHom& first) {
  if (!(first.target == second.source)) {
    throw DomainError("mode homomorphisms are not composable");
  }
  ModeHom out{first.source, second.target,
              mod(static_cast<long long>(first.multiplier) * second.multiplier,
                  second.target.size()),
              {}};
  for (const auto& [x, y] : first.map) out.map.emplace(x, second(y));
  return out;
}

bool commutes(const ModeHom& hom) {
  const int n = hom.source.size();
  const int n_prime = hom.target.size();
  if (mod(static_cast<long long>(hom.multiplier) * n, n_prime) != 0) return false;
  if (hom.map.size() != static_cast<std::size_t>(n)) return false;
  for (int x : hom.source.base().elements()) {
    auto it = hom.map.find(x);
    if (it == hom.map.end() || !hom.target.base().contains(it->second)) return false;
    if (hom.target.degree(it->second) != hom.on_degrees(hom.source.degree(x))) return false;
  }
  return true;
}

int ScaleHom::operator()(int x) const { return lookup(map, x); }

int ScaleHom::on_steps(long long g) const {
  return mod(static_cast<long long>(multiplier) * mod(g, source.size()), target.size());
}

namespace {

ScaleHom make_scale_map(const Scale& source, const Scale& target, int i, int i_prime,
                        int multiplier, int offset) {
  const int n = source.size();
  const int n_prime = target.size();
  const int a = mod(multiplier, n_prime);
  if (mod(static_cast<long long>(a) * n, n_prime) != 0) {
    throw DomainError("multiplier " + std::to_string(a) + " does not define a homomorphism Z_" +
                      std::to_string(n) + " -> Z_" + std::to_string(n_prime));
  }
  const Mode from(source.base(), i);
  const Mode to(target.base(), i_prime);
  ScaleHom hom{source, target, i, i_prime, a, mod(offset, n_prime), {}};
  for (int x : source.base().elements()) {
    hom.map.emplace(x, to.element_at(static_cast<long long>(a) * from.degree(x) + hom.offset));
  }
  return hom;
}

}  // namespace

ScaleHom scale_hom(const Scale& source, const Scale& target, int source_mode_index,
                   int target_mode_index) {
  if (source_mode_index < 0 || source_mode_index >= source.size() || target_mode_index < 0 ||
      target_mode_index >= target.size()) {
    throw RangeError("mode index out of range");
  }
  const int n = source.size();
  const int n_prime = target.size();
  return make_scale_map(source, target, source_mode_index, target_mode_index,
                        n_prime / std::gcd(n, n_prime), 0);
}

ScaleHom identity_hom(const Scale& scale) { return scale_hom(scale, scale, 0, 0); }

ScaleHom affine_scale_map(const Scale& source, const Scale& target, int source_origin,
                          int target_origin, int u, int v) {
  return make_scale_map(source, target, mode_index_for_tonic(source.base(), source_origin),
                        mode_index_for_tonic(target.base(), target_origin), u, v);
}

ScaleHom compose(const ScaleHom& second, const ScaleHom& first) {
  if (!(first.target == second.source)) {
    throw DomainError("scale homomorphisms are not composable");
  }
  ScaleHom out{first.source,
               second.target,
               first.source_mode_index,
               second.target_mode_index,
               mod(static_cast<long long>(first.multiplier) * second.multiplier,
                   second.target.size()),
               0,
               {}};
  for (const auto& [x, y] : first.map) out.map.emplace(x, second(y));
  const Mode from(out.source.base(), out.source_mode_index);
  const Mode to(out.target.base(), out.target_mode_index);
  out.offset = to.degree(out(from.tonic()));
  return out;
}

bool is_equivariant(const ScaleHom& hom) {
  const auto& xs = hom.source.base().elements();
  if (hom.map.size() != xs.size()) return false;
  for (const auto& [x, y] : hom.map) {
    if (!hom.source.base().contains(x) || !hom.target.base().contains(y)) return false;
  }
  for (int g = 0; g < hom.source.size(); ++g) {
    for (int x : xs) {
      if (hom(hom.source.translate(g, x)) != hom.target.translate(hom.on_steps(g), hom(x))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace orbitcover

#ifndef ORBITCOVER_MODULAR_HPP
#define ORBITCOVER_MODULAR_HPP

#include <numeric>
#include <vector>

namespace orbitcover {

// Least nonnegative residue of a mod n (n > 0).
inline int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline bool is_unit(int u, int n) { return std::gcd(mod(u, n), n) == 1; }

// Z_n^x as residues in [0, n). For n = 1 this is {0}, the trivial group.
inline std::vector<int> units(int n) {
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

}  // namespace orbitcover

#endif  // ORBITCOVER_MODULAR_HPP

#pragma once

// Reference computations written without the library, used as test oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

namespace oracle {

// s^i h with h in {1, t, u, tu}; h acts on <s> by multiplication with kMult[h].
struct GerstElem {
  int i = 0;
  int h = 0;
  friend bool operator==(const GerstElem&, const GerstElem&) = default;
};

inline constexpr std::array<int, 4> kMult = {1, 7, 3, 5};

inline GerstElem mul(GerstElem a, GerstElem b) {
  return {(a.i + kMult[a.h] * b.i) % 8, a.h ^ b.h};
}

inline GerstElem inv(GerstElem a) {
  // (s^i h)^-1 = h^-1 s^-i = s^{-m i} h, m = kMult[h] is its own inverse mod 8
  return {((-kMult[a.h] * a.i) % 8 + 8) % 8, a.h};
}

inline int index(GerstElem a) { return 4 * a.i + a.h; }
inline GerstElem elem(int idx) { return {idx / 4, idx % 4}; }

inline std::vector<std::set<int>> gerst_classes() {
  std::vector<std::set<int>> out;
  std::set<int> seen;
  for (int x = 0; x < 32; ++x) {
    if (seen.count(x)) continue;
    std::set<int> cls;
    for (int g = 0; g < 32; ++g) cls.insert(index(mul(mul(elem(g), elem(x)), inv(elem(g)))));
    seen.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

// Eigenvalues of the unit square Laplacian, pi^2 (m^2 + n^2), ascending.
inline std::vector<double> square_eigenvalues(bool dirichlet, int count) {
  std::vector<double> v;
  const int start = dirichlet ? 1 : 0;
  for (int m = start; m < 20; ++m)
    for (int n = start; n < 20; ++n) v.push_back(M_PI * M_PI * (m * m + n * n));
  std::sort(v.begin(), v.end());
  v.resize(count);
  return v;
}

}  // namespace oracle

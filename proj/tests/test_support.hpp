#pragma once

#include <utility>
#include <vector>

#include "silt/algebra.hpp"
#include "silt/field.hpp"
#include "silt/module.hpp"

namespace silt::testing {

struct PrimeGuard {
  explicit PrimeGuard(std::uint32_t p) { set_field_characteristic(p); }
  ~PrimeGuard() { set_field_characteristic(kDefaultCharacteristic); }
};

inline std::vector<int> killed_for_Ank(int k) {
  std::vector<int> killed;
  for (int i = 1; i <= k - 2; ++i) killed.push_back(i);
  return killed;
}

/// Intervals [lo, hi] (0-based vertices) of a linear monomial algebra that
/// contain no killed length-2 path; killed t (1-based) covers t..t+2.
inline std::vector<std::pair<int, int>> valid_intervals(int n, const std::vector<int>& killed) {
  std::vector<std::pair<int, int>> out;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi) {
      bool ok = true;
      for (int t : killed)
        if (t - 1 >= lo && t + 1 <= hi) ok = false;
      if (ok) out.emplace_back(lo, hi);
    }
  return out;
}

/// The tilting module of the A(n,k) family, summands in their natural order
/// (1-based): P(1..k-1), P(n), I(k+1..n).
inline std::vector<Module> family_tilting(const AlgebraPtr& a, int n, int k) {
  std::vector<Module> t;
  for (int i = 1; i <= k - 1; ++i) t.push_back(projective(a, i - 1));
  t.push_back(projective(a, n - 1));
  for (int i = k + 1; i <= n; ++i) t.push_back(injective(a, i - 1));
  return t;
}

}  // namespace silt::testing

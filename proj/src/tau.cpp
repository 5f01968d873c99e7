#include "silt/tau.hpp"

#include <algorithm>
#include <functional>

#include "silt/errors.hpp"
#include "silt/homological.hpp"

namespace silt {

bool is_tau_rigid(const std::vector<Module>& summands) {
  std::vector<Module> taus;
  for (const auto& z : summands) taus.push_back(tau(z));
  for (const auto& x : summands)
    for (const auto& t : taus)
      if (!t.is_zero() && hom_dim(x, t) != 0) return false;
  return true;
}

bool is_tau_rigid(const Module& z) {
  if (z.is_zero()) return true;
  return is_tau_rigid(decompose(z));
}

BongartzCompletion bongartz_completion(const IndecCatalog& cat, const std::vector<Module>& z_in) {
  std::vector<Module> z;
  for (const auto& m : z_in)
    if (!m.is_zero())
      for (auto& s : decompose(m)) z.push_back(std::move(s));
  if (!is_tau_rigid(z)) throw InvalidInput("Bongartz completion needs a tau-rigid module");

  std::vector<Module> tz;
  for (const auto& m : z) tz.push_back(tau(m));
  std::vector<int> torsion;
  for (int x = 0; x < cat.size(); ++x) {
    bool in = true;
    for (const auto& t : tz) in = in && (t.is_zero() || hom_dim(cat.modules[x], t) == 0);
    if (in) torsion.push_back(x);
  }
  BongartzCompletion out;
  for (int m : torsion) {
    bool ext_projective = true;
    for (int x : torsion)
      if (ext1_dim(cat.modules[m], cat.modules[x]) != 0) {
        ext_projective = false;
        break;
      }
    if (ext_projective) out.summands.push_back(m);
  }
  for (const auto& m : z) {
    const int i = cat.find(m);
    const auto it = std::find(out.summands.begin(), out.summands.end(), i);
    if (i < 0 || it == out.summands.end()) throw InvalidInput("Bongartz completion does not contain Z");
    out.z_positions.push_back(static_cast<int>(it - out.summands.begin()));
  }
  std::sort(out.z_positions.begin(), out.z_positions.end());
  out.z_positions.erase(std::unique(out.z_positions.begin(), out.z_positions.end()), out.z_positions.end());

  std::vector<Module> u;
  for (int i : out.summands) u.push_back(cat.modules[i]);
  if (static_cast<int>(u.size()) != cat.algebra->vertex_count() || !is_tau_rigid(u))
    throw InvalidInput("Bongartz completion is not tau-tilting");
  return out;
}

TauReduction tau_tilting_reduction(const IndecCatalog& cat, const std::vector<Module>& z) {
  TauReduction r;
  r.completion = bongartz_completion(cat, z);
  for (int i : r.completion.summands) r.u.push_back(cat.modules[i]);
  r.b = endomorphism_algebra(r.u);
  r.c = quotient_by_vertices(r.b, r.completion.z_positions);
  r.presentation = gabriel_presentation(r.c);
  return r;
}

std::vector<SupportTauTilting> enumerate_support_tau_tilting(const IndecCatalog& cat, int max_vertices) {
  const int n = cat.algebra->vertex_count();
  if (n > max_vertices)
    throw BudgetExceeded("support tau-tilting enumeration is capped at " + std::to_string(max_vertices) + " vertices");
  const int m = cat.size();
  std::vector<Module> taus;
  for (const auto& x : cat.modules) taus.push_back(tau(x));
  // ok[i][j]: Hom(M_i, tau M_j) = 0
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ok[i][j] = taus[j].is_zero() || hom_dim(cat.modules[i], taus[j]) == 0;

  std::vector<SupportTauTilting> out;
  std::vector<int> chosen;
  std::function<void(int)> grow = [&](int from) {
    std::vector<int> support(n, 0);
    for (int i : chosen)
      for (int v = 0; v < n; ++v) support[v] |= cat.modules[i].dim(v) > 0;
    int outside = 0;
    for (int v = 0; v < n; ++v) outside += !support[v];
    if (static_cast<int>(chosen.size()) + outside == n) {
      SupportTauTilting s{chosen, {}};
      for (int v = 0; v < n; ++v)
        if (!support[v]) s.cut.push_back(v);
      out.push_back(std::move(s));
    }
    if (static_cast<int>(chosen.size()) == n) return;
    for (int x = from; x < m; ++x) {
      if (!ok[x][x]) continue;
      bool fits = true;
      for (int y : chosen) fits = fits && ok[x][y] && ok[y][x];
      if (!fits) continue;
      chosen.push_back(x);
      grow(x + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

}  // namespace silt

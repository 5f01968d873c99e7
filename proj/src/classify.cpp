#include "silt/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "silt/errors.hpp"
#include "silt/homological.hpp"

namespace silt {

namespace {

bool dims_less(const Module& a, const Module& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  const auto& x = a.dims();
  const auto& y = b.dims();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

struct Knitter {
  AlgebraPtr a;
  int cap;
  std::vector<Module> found;
  std::deque<int> todo;
  std::set<std::pair<int, int>> arrows;
  std::set<std::pair<int, int>> taus;
  int meshes = 0;

  int lookup(const Module& m) const {
    for (std::size_t i = 0; i < found.size(); ++i)
      if (found[i].dims() == m.dims() && is_isomorphic(found[i], m)) return static_cast<int>(i);
    return -1;
  }

  int insert(const Module& m) {
    const int i = lookup(m);
    if (i >= 0) return i;
    found.push_back(m);
    todo.push_back(static_cast<int>(found.size()) - 1);
    return static_cast<int>(found.size()) - 1;
  }

  void mesh() {
    if (++meshes > cap) throw KnittingDiverged("knitting exceeded " + std::to_string(cap) + " meshes");
  }

  // Middle term of the almost split sequence ending in m, given tau m.
  std::vector<Module> middle(const Module& m, const Module& tm) {
    mesh();
    const Ext1 ext = ext1_basis(m, tm);
    if (ext.dim() != 1)
      throw KnittingDiverged("Ext^1(M, tau M) has dimension " + std::to_string(ext.dim()) +
                             "; input is not representation-directed");
    return decompose(extension(ext, Vec{Fp(1)}).middle());
  }

  void visit(int i) {
    const Module m = found[i];
    if (!is_injective(m)) {
      const Module up = tau_inverse(m);
      const int j = insert(up);
      taus.emplace(j, i);
      for (const auto& e : middle(up, m)) {
        const int k = insert(e);
        arrows.emplace(i, k);
        arrows.emplace(k, j);
      }
    } else {
      // irreducible maps out of an injective go to the summands of I / soc I
      std::vector<Matrix> soc(a->vertex_count());
      for (int v = 0; v < a->vertex_count(); ++v) {
        Matrix stack(0, m.dim(v));
        for (int ar = 0; ar < a->quiver().arrow_count(); ++ar)
          if (a->quiver().arrow(ar).source == v) stack = Matrix::vstack(stack, m.map(ar));
        soc[v] = kernel_basis(stack);
      }
      const Module q = quotient(m, soc).target;
      if (!q.is_zero())
        for (const auto& e : decompose(q)) arrows.emplace(i, insert(e));
    }
    if (!is_projective(m)) {
      const Module down = tau(m);
      const int j = insert(down);
      taus.emplace(i, j);
      for (const auto& e : middle(m, down)) {
        const int k = insert(e);
        arrows.emplace(j, k);
        arrows.emplace(k, i);
      }
    } else {
      std::vector<Matrix> rad(a->vertex_count());
      for (int v = 0; v < a->vertex_count(); ++v) {
        Matrix span(m.dim(v), 0);
        for (int ar = 0; ar < a->quiver().arrow_count(); ++ar)
          if (a->quiver().arrow(ar).target == v) span = Matrix::hstack(span, m.map(ar));
        rad[v] = column_space(span);
      }
      const Module r = submodule(m, rad).source;
      if (!r.is_zero())
        for (const auto& e : decompose(r)) arrows.emplace(insert(e), i);
    }
  }
};

void fill_hom_data(IndecCatalog& cat) {
  const int n = cat.size();
  cat.hom.assign(n, std::vector<int>(n, 0));
  cat.hom_digraph.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cat.hom[i][j] = hom_dim(cat.modules[i], cat.modules[j]);
      if (i != j && cat.hom[i][j] > 0) cat.hom_digraph[i].push_back(j);
    }
  cat.pd.resize(n);
  cat.id.resize(n);
  for (int i = 0; i < n; ++i) {
    cat.pd[i] = projective_dimension(cat.modules[i]);
    cat.id[i] = injective_dimension(cat.modules[i]);
  }
}

// reach[i][j]: a path of length >= 1 from i to j.
std::vector<std::vector<char>> reachability(const IndecCatalog& cat) {
  const int n = cat.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j : cat.hom_digraph[i]) r[i][j] = 1;
    if (cat.hom[i][i] > 1) r[i][i] = 1;  // non-local endomorphisms count as a loop
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace

int IndecCatalog::find(const Module& m) const {
  for (int i = 0; i < size(); ++i)
    if (modules[i].dims() == m.dims() && is_isomorphic(modules[i], m)) return i;
  return -1;
}

IndecCatalog enumerate_indecomposables(const AlgebraPtr& a, int mesh_cap) {
  Knitter k{a, mesh_cap, {}, {}, {}, {}, 0};
  for (int v = 0; v < a->vertex_count(); ++v) k.insert(projective(a, v));
  while (!k.todo.empty()) {
    const int i = k.todo.front();
    k.todo.pop_front();
    k.visit(i);
  }

  // deterministic order: by total dimension, then dimension vector from the top vertex
  std::vector<int> order(k.found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return dims_less(k.found[x], k.found[y]); });
  std::vector<int> where(order.size());
  IndecCatalog cat;
  cat.algebra = a;
  for (std::size_t i = 0; i < order.size(); ++i) {
    where[order[i]] = static_cast<int>(i);
    cat.modules.push_back(k.found[order[i]]);
  }
  for (auto [x, y] : k.arrows) cat.ar_edges.emplace_back(where[x], where[y]);
  for (auto [x, y] : k.taus) cat.tau_links.emplace_back(where[x], where[y]);
  std::sort(cat.ar_edges.begin(), cat.ar_edges.end());
  std::sort(cat.tau_links.begin(), cat.tau_links.end());
  cat.meshes = k.meshes;

  for (int v = 0; v < a->vertex_count(); ++v) {
    cat.projectives.push_back(cat.find(projective(a, v)));
    cat.injectives.push_back(cat.find(injective(a, v)));
    if (cat.injectives.back() < 0)
      throw KnittingDiverged("knitting missed the injective at vertex " + std::to_string(v + 1));
  }
  fill_hom_data(cat);
  const auto r = reachability(cat);
  for (int i = 0; i < cat.size(); ++i)
    if (r[i][i]) cat.directed = false;
  return cat;
}

std::vector<Module> interval_indecomposables(const AlgebraPtr& a) {
  const int n = a->vertex_count();
  const Quiver& q = a->quiver();
  bool linear = q.arrow_count() == n - 1;
  for (const auto& ar : q.arrows()) linear = linear && ar.source == ar.target + 1;
  for (int i = 0; linear && i + 1 < n; ++i) {
    int c = 0;
    for (const auto& ar : q.arrows()) c += ar.target == i;
    linear = c == 1;
  }
  if (!linear) throw InvalidInput("interval enumeration needs a linear quiver n -> ... -> 1");
  std::vector<Module> out;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi)
      if (a->cartan(hi, lo) > 0) out.push_back(interval(a, lo, hi));
  return out;
}

std::string module_label(const Module& m) {
  const int n = m.algebra().vertex_count();
  std::string s;
  for (int v = n - 1; v >= 0; --v)
    for (int t = 0; t < m.dim(v); ++t) {
      if (n >= 10 && !s.empty()) s += ',';
      s += std::to_string(v + 1);
    }
  return s.empty() ? "0" : s;
}

Membership la_ra_membership(const IndecCatalog& cat) {
  const auto r = reachability(cat);
  Membership out;
  for (int x = 0; x < cat.size(); ++x) {
    bool left = cat.pd[x] <= 1, right = cat.id[x] <= 1;
    for (int w = 0; w < cat.size(); ++w) {
      if (r[w][x] && cat.pd[w] > 1) left = false;
      if (r[x][w] && cat.id[w] > 1) right = false;
    }
    if (left) out.LA.push_back(x);
    if (right) out.RA.push_back(x);
  }
  return out;
}

int global_dimension(const AlgebraPtr& a) {
  int g = 0;
  for (int v = 0; v < a->vertex_count(); ++v) g = std::max(g, projective_dimension(simple(a, v)));
  return g;
}

ClassificationReport classify(const IndecCatalog& cat) {
  ClassificationReport rep;
  const int n = cat.size();
  rep.gl_dim = global_dimension(cat.algebra);
  rep.is_hereditary = rep.gl_dim <= 1;
  if (!rep.is_hereditary)
    for (int i = 0; i < n; ++i)
      if (cat.pd[i] > 1) {
        rep.witnesses.push_back({"hereditary", i, {}, "pd = " + std::to_string(cat.pd[i])});
        break;
      }

  rep.is_shod = true;
  for (int i = 0; i < n; ++i)
    if (cat.pd[i] > 1 && cat.id[i] > 1) {
      rep.is_shod = false;
      rep.witnesses.push_back(
          {"shod", i, {}, "pd = " + std::to_string(cat.pd[i]) + ", id = " + std::to_string(cat.id[i])});
      break;
    }
  rep.is_strictly_shod = rep.is_shod && rep.gl_dim == 3;
  if (!rep.is_strictly_shod)
    rep.witnesses.push_back({"strictly_shod", -1, {}, "gl.dim = " + std::to_string(rep.gl_dim)});

  const Membership mem = la_ra_membership(cat);
  rep.LA = mem.LA;
  rep.RA = mem.RA;
  std::vector<char> in_l(n, 0), in_r(n, 0);
  for (int x : rep.LA) in_l[x] = 1;
  for (int x : rep.RA) in_r[x] = 1;
  for (int x = 0; x < n; ++x) {
    if (!in_l[x] && !in_r[x]) rep.laura_complement.push_back(x);
    if (!in_l[x]) rep.left_glued_complement.push_back(x);
    if (!in_r[x]) rep.right_glued_complement.push_back(x);
  }

  // weakly shod: no path from outside L_A to outside R_A runs through a cycle
  const auto r = reachability(cat);
  rep.is_weakly_shod = true;
  for (int c = 0; c < n && rep.is_weakly_shod; ++c) {
    if (!r[c][c]) continue;
    for (int x = 0; x < n && rep.is_weakly_shod; ++x) {
      if (in_l[x] || !(x == c || r[x][c])) continue;
      for (int y = 0; y < n; ++y)
        if (!in_r[y] && (y == c || r[c][y])) {
          rep.is_weakly_shod = false;
          rep.witnesses.push_back({"weakly_shod", c, {x, c, y}, "path through a cycle"});
          break;
        }
    }
  }

  if (cat.directed) {
    // longest path in the (acyclic) digraph from an injective to a projective;
    // modules are sorted by dimension, so use memoised DFS rather than index order
    std::vector<int> best(n, -2);
    std::vector<char> is_proj(n, 0);
    for (int p : cat.projectives) is_proj[p] = 1;
    auto longest = [&](auto&& self, int x) -> int {
      if (best[x] != -2) return best[x];
      int b = is_proj[x] ? 0 : -1;
      for (int y : cat.hom_digraph[x]) {
        const int t = self(self, y);
        if (t >= 0) b = std::max(b, t + 1);
      }
      return best[x] = b;
    };
    rep.max_injective_to_projective = 0;
    for (int i : cat.injectives) rep.max_injective_to_projective = std::max(rep.max_injective_to_projective, longest(longest, i));
  } else {
    rep.max_injective_to_projective = -1;
    rep.notes.push_back("hom digraph has cycles; path lengths decided by cycle analysis");
  }
  rep.notes.push_back("representation-finite: laura and glued complements are finite automatically");
  return rep;
}

ClassificationReport classify(const AlgebraPtr& a, int mesh_cap) {
  return classify(enumerate_indecomposables(a, mesh_cap));
}

}  // namespace silt

#include "silt/endo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "silt/errors.hpp"

namespace silt {

namespace {

Vec unit(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}

// Basis of span(xs * ys) where xs, ys are lists of algebra elements.
std::vector<Vec> product_span(const AssociativeAlgebra& b, const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  SpanBuilder span(b.dim());
  std::vector<Vec> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Vec p = b.multiply(x, y);
      if (!is_zero(p) && span.add(p)) out.push_back(std::move(p));
    }
  return out;
}

bool in_span(const std::vector<Vec>& basis, int dim, const Vec& v) {
  SpanBuilder s(dim);
  for (const auto& b : basis) s.add(b);
  return s.contains(v);
}

// Radical of the local algebra e B e spanned by `block` (B-indices), with
// identity at index `id`. Returns nullopt when e B e is not local over k.
std::optional<std::vector<Vec>> local_radical(const AssociativeAlgebra& b, const std::vector<int>& block, int id) {
  const int d = b.dim();
  const int k = static_cast<int>(block.size());
  const Fp inv_k = Fp(k).inverse();
  std::vector<Vec> rad;
  for (int x : block) {
    if (x == id) continue;
    // lambda = trace of left multiplication / k; x - lambda is nilpotent when local
    Fp tr = 0;
    for (int c = 0; c < k; ++c) tr += b.product(x, block[c])[block[c]];
    Vec r = unit(d, x);
    r[id] -= tr * inv_k;
    rad.push_back(std::move(r));
  }
  // closed under products and nilpotent
  for (const auto& x : rad)
    for (const auto& y : rad)
      if (!in_span(rad, d, b.multiply(x, y))) return std::nullopt;
  std::vector<Vec> power = rad;
  for (int step = 0; step <= k && !power.empty(); ++step) power = product_span(b, power, rad);
  if (!power.empty()) return std::nullopt;
  return rad;
}

}  // namespace

AssociativeAlgebra algebra_from_homs(const HomTable& h, std::vector<Vec>* coords) {
  const int m = h.count;
  // Per End(T_a): new basis = identity followed by a complement; cob[a] maps
  // new coordinates to old ones.
  std::vector<Matrix> cob(m), cob_inv(m);
  for (int a = 0; a < m; ++a) {
    const int k = h.dims[a][a];
    if (k == 0) throw InvalidInput("endomorphism algebra: zero summand");
    Matrix base = Matrix::from_columns(k, {h.identity[a]});
    const auto ext = extend_basis(base, Matrix::identity(k));
    std::vector<Vec> cols{h.identity[a]};
    for (int c : ext) cols.push_back(unit(k, c));
    cob[a] = Matrix::from_columns(k, cols);
    cob_inv[a] = *inverse(cob[a]);
  }
  auto to_old = [&](int a, int b, const Vec& v) { return a == b ? cob[a] * v : v; };
  auto to_new = [&](int a, int b, const Vec& v) { return a == b ? cob_inv[a] * v : v; };

  std::vector<AssociativeAlgebra::Block> blocks;
  std::vector<std::string> labels;
  std::vector<int> idem(m);
  std::vector<std::vector<int>> offset(m, std::vector<int>(m));
  std::vector<std::pair<int, int>> owner;  // basis index -> (a, b) of Hom(T_a, T_b)
  std::vector<int> local;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      offset[a][b] = static_cast<int>(blocks.size());
      for (int i = 0; i < h.dims[a][b]; ++i) {
        if (a == b && i == 0) idem[a] = static_cast<int>(blocks.size());
        blocks.push_back({b, a});
        labels.push_back(a == b && i == 0 ? "e" + std::to_string(a + 1)
                                          : "f" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + "_" +
                                                std::to_string(i + 1));
        owner.emplace_back(a, b);
        local.push_back(i);
      }
    }
  const int d = static_cast<int>(blocks.size());
  std::vector<Vec> table(static_cast<std::size_t>(d) * d, Vec(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      // x : T_a -> T_b, y : T_c -> T_a', product nonzero only when a' = a
      const auto [xa, xb] = owner[x];
      const auto [yc, ya] = owner[y];
      if (ya != xa) continue;
      const Vec f = to_old(yc, ya, unit(h.dims[yc][ya], local[y]));
      const Vec g = to_old(xa, xb, unit(h.dims[xa][xb], local[x]));
      Vec acc(h.dims[yc][xb]);
      for (int i = 0; i < static_cast<int>(f.size()); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(g.size()); ++j)
          if (!g[j].is_zero()) axpy(acc, f[i] * g[j], h.compose(yc, ya, xb, i, j));
      }
      const Vec nv = to_new(yc, xb, acc);
      Vec& out = table[static_cast<std::size_t>(x) * d + y];
      for (int i = 0; i < static_cast<int>(nv.size()); ++i) out[offset[yc][xb] + i] = nv[i];
    }
  if (coords) {
    coords->clear();
    for (int x = 0; x < d; ++x) {
      const auto [a, b] = owner[x];
      coords->push_back(to_old(a, b, unit(h.dims[a][b], local[x])));
    }
  }
  AssociativeAlgebra alg(m, std::move(blocks), std::move(labels), std::move(idem), std::move(table));
  for (int a = 0; a < m; ++a)
    if (!local_radical(alg, alg.block_indices(a, a), alg.idempotent(a)))
      throw NonLocalSummand("summand " + std::to_string(a + 1) + " has a non-local endomorphism ring");
  return alg;
}

AssociativeAlgebra endomorphism_algebra(const std::vector<Module>& summands) {
  return endomorphism_algebra_with_maps(summands).algebra;
}

ModuleEndomorphisms endomorphism_algebra_with_maps(const std::vector<Module>& summands) {
  const int m = static_cast<int>(summands.size());
  std::vector<std::vector<std::vector<ModuleMorphism>>> basis(m, std::vector<std::vector<ModuleMorphism>>(m));
  HomTable h;
  h.count = m;
  h.dims.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      basis[a][b] = hom_basis(summands[a], summands[b]);
      h.dims[a][b] = static_cast<int>(basis[a][b].size());
    }
  for (int a = 0; a < m; ++a) h.identity.push_back(*hom_coordinates(basis[a][a], ModuleMorphism::identity(summands[a])));
  h.compose = [&](int a, int b, int c, int i, int j) {
    return *hom_coordinates(basis[a][c], compose(basis[b][c][j], basis[a][b][i]));
  };
  ModuleEndomorphisms out;
  std::vector<Vec> coords;
  out.algebra = algebra_from_homs(h, &coords);
  for (int x = 0; x < out.algebra.dim(); ++x) {
    const int a = out.algebra.block(x).target, b = out.algebra.block(x).source;
    ModuleMorphism f = ModuleMorphism::zero(summands[a], summands[b]);
    for (std::size_t i = 0; i < coords[x].size(); ++i)
      if (!coords[x][i].is_zero()) f = f + coords[x][i] * basis[a][b][i];
    out.maps.push_back(std::move(f));
  }
  return out;
}

AlgebraPresentation gabriel_presentation(const AssociativeAlgebra& b) {
  const int n = b.vertex_count(), d = b.dim();
  // radical, block by block
  std::vector<std::vector<std::vector<Vec>>> rad(n, std::vector<std::vector<Vec>>(n));
  std::vector<Vec> rad_all;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const auto idx = b.block_indices(s, t);
      if (s == t) {
        const auto r = local_radical(b, idx, b.idempotent(s));
        if (!r) throw NotSplitBasic("e" + std::to_string(s + 1) + " B e" + std::to_string(s + 1) + " is not local over k");
        rad[s][t] = *r;
      } else {
        for (int i : idx) rad[s][t].push_back(unit(d, i));
      }
      rad_all.insert(rad_all.end(), rad[s][t].begin(), rad[s][t].end());
    }
  const auto rad2 = product_span(b, rad_all, rad_all);

  // arrows: lift a basis of e_s rad e_t / e_s rad^2 e_t
  Quiver q(n);
  std::vector<Vec> arrow_images;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (rad[s][t].empty()) continue;
      std::vector<Vec> base;
      for (const auto& v : rad2) {
        // rad^2 is spanned by block-homogeneous products, so each vector sits in one block
        int i = 0;
        while (i < d && v[i].is_zero()) ++i;
        if (b.block(i).source == s && b.block(i).target == t) base.push_back(v);
      }
      const auto picked = extend_basis(Matrix::from_columns(d, base), Matrix::from_columns(d, rad[s][t]));
      int count = 0;
      for (int c : picked) {
        q.add_arrow("x" + std::to_string(s + 1) + "_" + std::to_string(t + 1) + "_" + std::to_string(++count), s, t);
        arrow_images.push_back(rad[s][t][c]);
      }
    }

  // evaluate paths length by length until every path of the current length vanishes
  struct Entry {
    Path path;
    Vec image;
  };
  std::vector<std::vector<Entry>> layers(1);
  for (int v = 0; v < n; ++v) layers[0].push_back({Path::trivial(v), unit(d, b.idempotent(v))});
  std::size_t total = 0;
  while (true) {
    const auto& last = layers.back();
    bool all_zero = layers.size() > 1;
    for (const auto& e : last) all_zero = all_zero && is_zero(e.image);
    if (all_zero || (layers.size() > 1 && last.empty())) break;
    if (static_cast<int>(layers.size()) > d + 1) throw NotSplitBasic("radical is not nilpotent");
    std::vector<Entry> next;
    for (const auto& e : last)
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != e.path.target) continue;
        Path p = e.path;
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
        next.push_back({std::move(p), b.multiply(e.image, arrow_images[a])});
        if (++total > 200000) throw BudgetExceeded("path enumeration budget exceeded");
      }
    layers.push_back(std::move(next));
  }
  const int top = static_cast<int>(layers.size()) - 1;  // every path of this length vanishes

  {
    SpanBuilder span(d);
    for (int l = 0; l < top; ++l)
      for (const auto& e : layers[l]) span.add(e.image);
    if (span.rank() != d) throw NotSplitBasic("arrows do not generate the algebra");
  }

  // kernel of the evaluation on paths of length 2..top
  std::vector<const Entry*> cols;
  for (int l = 2; l <= top; ++l) {
    std::vector<const Entry*> layer;
    for (const auto& e : layers[l]) layer.push_back(&e);
    std::sort(layer.begin(), layer.end(), [&](const Entry* x, const Entry* y) { return path_less(q, x->path, y->path); });
    cols.insert(cols.end(), layer.begin(), layer.end());
  }
  const int np = static_cast<int>(cols.size());
  std::map<std::pair<int, std::vector<int>>, int> where;
  for (int i = 0; i < np; ++i) where[{cols[i]->path.source, cols[i]->path.arrows}] = i;
  std::vector<Vec> images;
  for (const auto* e : cols) images.push_back(e->image);
  const Matrix ker = kernel_basis(Matrix::from_columns(d, images));

  // generators: ker modulo J ker + ker J, truncated at length `top`
  SpanBuilder ideal(np);
  auto shift = [&](const Vec& k, int a, bool left) {
    Vec out(np);
    for (int i = 0; i < np; ++i) {
      if (k[i].is_zero()) continue;
      const Path& p = cols[i]->path;
      std::vector<int> arrows = p.arrows;
      int source = p.source;
      if (left) {
        if (q.arrow(a).target != p.source) continue;
        arrows.insert(arrows.begin(), a);
        source = q.arrow(a).source;
      } else {
        if (q.arrow(a).source != p.target) continue;
        arrows.push_back(a);
      }
      const auto it = where.find({source, arrows});
      if (it != where.end()) out[it->second] += k[i];
    }
    return out;
  };
  for (int c = 0; c < ker.cols(); ++c) {
    const Vec k = ker.column(c);
    for (int a = 0; a < q.arrow_count(); ++a) {
      ideal.add(shift(k, a, true));
      ideal.add(shift(k, a, false));
    }
  }
  std::vector<Relation> rels;
  for (int c = 0; c < ker.cols(); ++c) {
    const Vec k = ker.column(c);
    if (!ideal.add(k)) continue;
    Relation r;
    for (int i = np - 1; i >= 0; --i)
      if (!k[i].is_zero()) r.terms.push_back({k[i], cols[i]->path});
    rels.push_back(std::move(r));
  }

  AlgebraPresentation out;
  out.algebra = build_algebra(q, rels);
  if (out.algebra->dim() != d) throw NotSplitBasic("presented algebra has the wrong dimension");
  out.arrow_images = std::move(arrow_images);
  std::map<std::pair<int, std::vector<int>>, Vec> all_images;
  for (const auto& layer : layers)
    for (const auto& e : layer) all_images[{e.path.source, e.path.arrows}] = e.image;
  for (const auto& p : out.algebra->basis()) out.basis_images.push_back(all_images.at({p.source, p.arrows}));
  return out;
}

namespace {

struct IsoSearch {
  const BoundQuiverAlgebra& p;
  const BoundQuiverAlgebra& q;
  std::int64_t budget;
  std::int64_t steps = 0;
  int n;
  std::vector<std::vector<std::vector<int>>> par_p, par_q;  // parallel arrows per (s, t)
  std::vector<int> sigma;
  std::vector<char> used;
  PresentationIso found;

  void tick() {
    if (++steps > budget) throw SearchBudgetExceeded("presentation isomorphism search exceeded its budget");
  }

  bool compatible(int v, int w) const {
    if (p.cartan(v, v) != q.cartan(w, w) || par_p[v][v].size() != par_q[w][w].size()) return false;
    for (int u = 0; u < n; ++u) {
      if (sigma[u] < 0) continue;
      const int x = sigma[u];
      if (p.cartan(u, v) != q.cartan(x, w) || p.cartan(v, u) != q.cartan(w, x)) return false;
      if (par_p[u][v].size() != par_q[x][w].size() || par_p[v][u].size() != par_q[w][x].size()) return false;
    }
    return true;
  }

  bool relations_hold(const std::vector<int>& amap, const std::vector<Fp>& scale) const {
    for (const auto& r : p.relations()) {
      Vec sum(q.dim());
      for (const auto& t : r.terms) {
        Path img{sigma[t.path.source], sigma[t.path.target], {}};
        Fp c = t.coeff;
        for (int a : t.path.arrows) {
          img.arrows.push_back(amap[a]);
          c *= scale[a];
        }
        axpy(sum, c, q.normal_form(img));
      }
      if (!is_zero(sum)) return false;
    }
    return true;
  }

  bool try_scales(const std::vector<int>& amap) {
    // spanning forest of the underlying graph: its arrows are gauged to 1
    const int m = p.quiver().arrow_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> free_arrows;
    for (int a = 0; a < m; ++a) {
      const int x = root(p.quiver().arrow(a).source), y = root(p.quiver().arrow(a).target);
      if (x == y)
        free_arrows.push_back(a);
      else
        parent[x] = y;
    }
    const int f = std::min<int>(static_cast<int>(free_arrows.size()), 12);
    for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
      tick();
      std::vector<Fp> scale(m, Fp(1));
      for (int i = 0; i < f; ++i)
        if (mask >> i & 1) scale[free_arrows[i]] = Fp(-1);
      if (relations_hold(amap, scale)) {
        found = {sigma, amap, scale};
        return true;
      }
    }
    return false;
  }

  // assign arrows block by block, permuting parallel arrows
  bool match_arrows(std::vector<std::pair<int, int>>& pairs, std::size_t k, std::vector<int>& amap) {
    if (k == pairs.size()) return try_scales(amap);
    const auto [s, t] = pairs[k];
    const auto& src = par_p[s][t];
    std::vector<int> dst = par_q[sigma[s]][sigma[t]];
    std::sort(dst.begin(), dst.end());
    do {
      tick();
      for (std::size_t i = 0; i < src.size(); ++i) amap[src[i]] = dst[i];
      if (match_arrows(pairs, k + 1, amap)) return true;
    } while (std::next_permutation(dst.begin(), dst.end()));
    return false;
  }

  bool assign(int v) {
    if (v == n) {
      std::vector<std::pair<int, int>> pairs;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (!par_p[s][t].empty()) pairs.emplace_back(s, t);
      std::vector<int> amap(p.quiver().arrow_count(), -1);
      return match_arrows(pairs, 0, amap);
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || !compatible(v, w)) continue;
      tick();
      sigma[v] = w;
      used[w] = 1;
      if (assign(v + 1)) return true;
      sigma[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

std::vector<std::vector<std::vector<int>>> parallel_arrows(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<std::vector<int>>> out(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < q.arrow_count(); ++a) out[q.arrow(a).source][q.arrow(a).target].push_back(a);
  return out;
}

}  // namespace

bool presentations_isomorphic(const BoundQuiverAlgebra& p, const BoundQuiverAlgebra& q, PresentationIso* witness,
                              std::int64_t budget) {
  if (p.vertex_count() != q.vertex_count() || p.dim() != q.dim() ||
      p.quiver().arrow_count() != q.quiver().arrow_count())
    return false;
  const int n = p.vertex_count();
  IsoSearch s{p, q, budget, 0, n, parallel_arrows(p.quiver()), parallel_arrows(q.quiver()),
              std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
  if (!s.assign(0)) return false;
  if (witness) *witness = s.found;
  return true;
}

}  // namespace silt

#include "silt/homological.hpp"

#include <random>

#include "silt/errors.hpp"

namespace silt {

Matrix top_basis(const Module& m, int v) {
  const Quiver& q = m.algebra().quiver();
  Matrix rad(m.dim(v), 0);
  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).target == v) rad = Matrix::hstack(rad, m.map(a));
  const auto picked = extend_basis(rad, Matrix::identity(m.dim(v)));
  return Matrix::identity(m.dim(v)).select_columns(picked);
}

ProjectiveCover projective_cover(const Module& m) {
  ProjectiveCover c;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) {
    const Matrix t = top_basis(m, v);
    for (int j = 0; j < t.cols(); ++j) {
      c.tops.push_back(v);
      c.gens.push_back(t.column(j));
    }
  }
  const Module p = projective_sum(m.algebra_ptr(), c.tops);
  c.map = from_projective_sum(p, c.tops, c.gens, m);
  return c;
}

bool ShortExactSequence::is_exact() const {
  for (std::size_t v = 0; v < iota.maps.size(); ++v) {
    if (rank(iota.maps[v]) != iota.maps[v].cols()) return false;
    if (rank(pi.maps[v]) != pi.maps[v].rows()) return false;
    if (!(pi.maps[v] * iota.maps[v]).is_zero()) return false;
    if (middle().dim(static_cast<int>(v)) != left().dim(static_cast<int>(v)) + right().dim(static_cast<int>(v)))
      return false;
  }
  return iota.is_valid() && pi.is_valid();
}

Syzygy syzygy(const Module& m) {
  Syzygy s;
  s.cover = projective_cover(m);
  s.inclusion = kernel(s.cover.map);
  return s;
}

std::vector<std::vector<int>> projective_resolution(const Module& m, int cap) {
  std::vector<std::vector<int>> terms;
  Module cur = m;
  while (!cur.is_zero() && static_cast<int>(terms.size()) <= cap) {
    Syzygy s = syzygy(cur);
    terms.push_back(s.cover.tops);
    cur = s.inclusion.source;
  }
  return terms;
}

int projective_dimension(const Module& m) {
  if (m.is_zero()) return kDimNegInf;
  Module cur = m;
  for (int k = 0; k <= kResolutionCap; ++k) {
    Syzygy s = syzygy(cur);
    if (s.inclusion.source.is_zero()) return k;
    cur = s.inclusion.source;
  }
  return kDimInfinite;
}

int injective_dimension(const Module& m) { return projective_dimension(dual(m)); }

bool is_projective(const Module& m) {
  const auto c = projective_cover(m);
  return c.map.source.total_dim() == m.total_dim();
}

bool is_injective(const Module& m) { return is_projective(dual(m)); }

Ext1 ext1_basis(const Module& m, const Module& n) {
  Ext1 e{syzygy(m), {}, n};
  const Module& omega = e.syz.inclusion.source;
  const Module& p0 = e.syz.inclusion.target;
  const auto h = hom_basis(omega, n);
  if (h.empty()) return e;
  SpanBuilder restricted(static_cast<int>(h.size()));
  for (const auto& g : hom_basis(p0, n)) {
    const auto c = hom_coordinates(h, compose(g, e.syz.inclusion));
    restricted.add(*c);
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    Vec u(h.size());
    u[i] = 1;
    if (restricted.add(u)) e.classes.push_back(h[i]);
  }
  return e;
}

int ext1_dim(const Module& m, const Module& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const Syzygy s = syzygy(m);
  int p0n = 0;
  for (int t : s.cover.tops) p0n += n.dim(t);
  // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega,N) -> Ext^1(M,N) -> 0
  return hom_dim(s.inclusion.source, n) - p0n + hom_dim(m, n);
}

ShortExactSequence extension(const Ext1& ext, const Vec& coeffs) {
  const ModuleMorphism& iota = ext.syz.inclusion;
  const Module& omega = iota.source;
  const Module& p0 = iota.target;
  ModuleMorphism h = ModuleMorphism::zero(omega, ext.n);
  for (std::size_t i = 0; i < ext.classes.size(); ++i) h = h + coeffs[i] * ext.classes[i];
  const std::vector<Module> parts{p0, ext.n};
  const Module sum = direct_sum(parts, p0.algebra_ptr());
  ModuleMorphism phi = ModuleMorphism::zero(omega, sum);
  for (std::size_t v = 0; v < phi.maps.size(); ++v) phi.maps[v] = Matrix::vstack(iota.maps[v], h.maps[v] * Fp(-1));
  const ModuleMorphism q = cokernel(phi);
  ShortExactSequence ses;
  ses.iota = compose(q, sum_inclusion(parts, sum, 1));
  ses.pi = factor_through_epi(q, compose(ext.syz.cover.map, sum_projection(parts, sum, 0)));
  return ses;
}

Presentation minimal_presentation(const Module& m) {
  const BoundQuiverAlgebra& a = m.algebra();
  Presentation pr;
  const Syzygy s0 = syzygy(m);
  pr.p0_tops = s0.cover.tops;
  const ProjectiveCover c1 = projective_cover(s0.inclusion.source);
  pr.p1_tops = c1.tops;
  pr.x.assign(pr.p0_tops.size(), std::vector<Vec>(pr.p1_tops.size(), Vec(a.dim())));
  for (std::size_t j = 0; j < pr.p1_tops.size(); ++j) {
    const int b = pr.p1_tops[j];
    const Vec img = s0.inclusion.maps[b] * c1.gens[j];  // element of (P0)_b
    int off = 0;
    for (std::size_t i = 0; i < pr.p0_tops.size(); ++i) {
      const auto& paths = a.paths_between(pr.p0_tops[i], b);
      for (std::size_t k = 0; k < paths.size(); ++k) pr.x[i][j][paths[k]] = img[off + static_cast<int>(k)];
      off += static_cast<int>(paths.size());
    }
  }
  return pr;
}

Module tau(const Module& m) {
  if (m.is_zero()) return Module::zero(m.algebra_ptr());
  const AlgebraPtr& ap = m.algebra_ptr();
  const BoundQuiverAlgebra& a = *ap;
  const Presentation pr = minimal_presentation(m);
  if (pr.p1_tops.empty()) return Module::zero(ap);
  // nu of the presentation: D Hom(-, A) turns P(v) into I(v)
  const Module i1 = injective_sum(ap, pr.p1_tops);
  const Module i0 = injective_sum(ap, pr.p0_tops);
  ModuleMorphism nf = ModuleMorphism::zero(i1, i0);
  for (int w = 0; w < a.vertex_count(); ++w) {
    int ro = 0;
    for (std::size_t i = 0; i < pr.p0_tops.size(); ++i) {
      const auto& ys = a.paths_between(w, pr.p0_tops[i]);
      int co = 0;
      for (std::size_t j = 0; j < pr.p1_tops.size(); ++j) {
        const auto& zs = a.paths_between(w, pr.p1_tops[j]);
        for (std::size_t k = 0; k < ys.size(); ++k) {
          Vec y(a.dim());
          y[ys[k]] = 1;
          const Vec yx = a.multiply(y, pr.x[i][j]);
          for (std::size_t l = 0; l < zs.size(); ++l)
            nf.maps[w](ro + static_cast<int>(k), co + static_cast<int>(l)) = yx[zs[l]];
        }
        co += static_cast<int>(zs.size());
      }
      ro += static_cast<int>(ys.size());
    }
  }
  return kernel(nf).source;
}

Module tau_inverse(const Module& m) {
  if (m.is_zero()) return m;
  return dual_over(tau(dual(m)), m.algebra_ptr());
}

EndRing endomorphism_ring(const Module& m) {
  EndRing e;
  e.basis = hom_basis(m, m);
  const int d = e.dim();
  e.table.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) e.table.push_back(*hom_coordinates(e.basis, compose(e.basis[i], e.basis[j])));
  return e;
}

namespace {

Fp trace_of_product(const ModuleMorphism& x, const ModuleMorphism& y) {
  Fp t;
  for (std::size_t v = 0; v < x.maps.size(); ++v) {
    const Matrix& a = x.maps[v];
    const Matrix& b = y.maps[v];
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  }
  return t;
}

bool is_nilpotent(const ModuleMorphism& x) {
  ModuleMorphism p = x;
  const int n = x.source.total_dim();
  for (int k = 1; k < n && !p.is_zero(); ++k) p = compose(p, x);
  return p.is_zero();
}

ModuleMorphism combination(const std::vector<ModuleMorphism>& basis, const Vec& c) {
  ModuleMorphism f = ModuleMorphism::zero(basis.front().source, basis.front().target);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) f = f + c[i] * basis[i];
  return f;
}

// Minimal polynomial of an endomorphism, lowest coefficient first, monic.
Vec minimal_polynomial(const ModuleMorphism& x) {
  const int n = x.source.total_dim();
  std::vector<Vec> powers;
  ModuleMorphism p = ModuleMorphism::identity(x.source);
  for (int d = 0; d <= n; ++d) {
    const Vec fp = p.flatten();
    if (!powers.empty()) {
      const auto c = solve(Matrix::from_columns(static_cast<int>(fp.size()), powers),
                           Matrix::from_columns(static_cast<int>(fp.size()), {fp}));
      if (c) {
        Vec poly(d + 1);
        for (int i = 0; i < d; ++i) poly[i] = -(*c)(i, 0);
        poly[d] = 1;
        return poly;
      }
    }
    powers.push_back(fp);
    p = compose(p, x);
  }
  throw IdempotentLiftFailure("minimal polynomial search exceeded the module dimension");
}

std::vector<Fp> roots(const Vec& poly) {
  std::vector<Fp> out;
  const std::uint32_t p = field_characteristic();
  for (std::uint32_t l = 0; l < p; ++l) {
    Fp acc;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * Fp(l) + *it;
    if (acc.is_zero()) out.emplace_back(l);
    if (out.size() + 1 >= poly.size()) break;
  }
  return out;
}

}  // namespace

Matrix end_radical(const EndRing& e) {
  const int d = e.dim();
  if (d == 0) return Matrix(0, 0);
  const Module& m = e.basis.front().source;
  if (static_cast<std::uint32_t>(m.total_dim()) >= field_characteristic())
    throw IdempotentLiftFailure("trace-form radical needs the characteristic to exceed dim M");
  Matrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = trace_of_product(e.basis[i], e.basis[j]);
  const Matrix rad = kernel_basis(gram);
  for (int c = 0; c < rad.cols(); ++c)
    if (!is_nilpotent(combination(e.basis, rad.column(c))))
      throw IdempotentLiftFailure("trace-form radical contains a non-nilpotent element");
  return rad;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  const EndRing e = endomorphism_ring(m);
  return e.dim() - end_radical(e).cols() == 1;
}

std::vector<Module> decompose(const Module& m) {
  if (m.is_zero()) return {};
  const EndRing e = endomorphism_ring(m);
  if (e.dim() - end_radical(e).cols() == 1) return {m};

  std::mt19937_64 rng(0xdec0 + static_cast<std::uint64_t>(m.total_dim()));
  std::uniform_int_distribution<std::int64_t> coef(0, field_characteristic() - 1);
  const int n = m.total_dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec c(e.dim());
    for (auto& x : c) x = Fp(coef(rng));
    const ModuleMorphism x = combination(e.basis, c);
    for (Fp lambda : roots(minimal_polynomial(x))) {
      const ModuleMorphism shifted = x + (-lambda) * ModuleMorphism::identity(m);
      ModuleMorphism y = shifted;
      for (int k = 1; k < n; ++k) y = compose(y, shifted);
      if (y.is_zero()) continue;
      // Fitting: M = ker y (+) im y
      std::vector<Module> out = decompose(kernel(y).source);
      for (auto& s : decompose(image(y).source)) out.push_back(std::move(s));
      return out;
    }
  }
  throw IdempotentLiftFailure("no splitting idempotent found after 64 random endomorphisms");
}

ShortExactSequence canonical_sequence(const Module& m, const std::vector<int>& e_vertices) {
  std::vector<int> tops;
  std::vector<Vec> gens;
  for (int v : e_vertices)
    for (int k = 0; k < m.dim(v); ++k) {
      Vec u(m.dim(v));
      u[k] = 1;
      tops.push_back(v);
      gens.push_back(std::move(u));
    }
  const Module p = projective_sum(m.algebra_ptr(), tops);
  ShortExactSequence ses;
  ses.iota = image(from_projective_sum(p, tops, gens, m));
  ses.pi = cokernel(ses.iota);
  return ses;
}

}  // namespace silt

#include "silt/module.hpp"

#include <numeric>
#include <random>

#include "silt/errors.hpp"

namespace silt {

Module::Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = algebra_->quiver();
  if (static_cast<int>(dims_.size()) != q.vertex_count()) throw InvalidInput("module: dimension vector has wrong length");
  if (static_cast<int>(maps_.size()) != q.arrow_count()) throw InvalidInput("module: wrong number of arrow maps");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw InvalidInput("module: map for arrow '" + ar.name + "' has the wrong shape");
  }
  for (const auto& r : algebra_->relations()) {
    const Path& p0 = r.terms.front().path;
    Matrix sum(dims_[p0.target], dims_[p0.source]);
    for (const auto& t : r.terms) sum += t.coeff * path_action(t.path);
    if (!sum.is_zero()) throw InvalidInput("module: a relation does not vanish");
  }
}

Module Module::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Matrix> maps(q.arrow_count());
  return Module(std::move(algebra), std::vector<int>(q.vertex_count(), 0), std::move(maps));
}

int Module::total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0); }

int Module::offset(int v) const { return std::accumulate(dims_.begin(), dims_.begin() + v, 0); }

Matrix Module::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dims_[p.source]);
  for (int a : p.arrows) m = maps_[a] * m;
  return m;
}

bool operator==(const Module& a, const Module& b) {
  return same_algebra(*a.algebra_, *b.algebra_) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return &a == &b || a.key() == b.key();
}

ModuleMorphism ModuleMorphism::zero(const Module& m, const Module& n) {
  ModuleMorphism f{m, n, {}};
  for (int v = 0; v < m.algebra().vertex_count(); ++v) f.maps.emplace_back(n.dim(v), m.dim(v));
  return f;
}

ModuleMorphism ModuleMorphism::identity(const Module& m) {
  ModuleMorphism f{m, m, {}};
  for (int v = 0; v < m.algebra().vertex_count(); ++v) f.maps.push_back(Matrix::identity(m.dim(v)));
  return f;
}

bool ModuleMorphism::is_zero() const noexcept {
  for (const auto& m : maps)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMorphism::is_valid() const {
  const Quiver& q = source.algebra().quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (target.map(a) * maps[ar.source] != maps[ar.target] * source.map(a)) return false;
  }
  return true;
}

bool ModuleMorphism::is_iso() const {
  for (std::size_t v = 0; v < maps.size(); ++v) {
    if (maps[v].rows() != maps[v].cols()) return false;
    if (rank(maps[v]) != maps[v].rows()) return false;
  }
  return true;
}

Vec ModuleMorphism::flatten() const {
  Vec out;
  for (const auto& m : maps) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Matrix ModuleMorphism::total_matrix() const {
  Matrix t(target.total_dim(), source.total_dim());
  int r = 0, c = 0;
  for (const auto& m : maps) {
    t.set_block(r, c, m);
    r += m.rows();
    c += m.cols();
  }
  return t;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
  return h;
}

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
  ModuleMorphism h = a;
  for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] += b.maps[v];
  return h;
}

ModuleMorphism operator*(Fp s, const ModuleMorphism& f) {
  ModuleMorphism h = f;
  for (auto& m : h.maps) m *= s;
  return h;
}

ModuleMorphism unflatten(const Module& m, const Module& n, const Vec& v) {
  ModuleMorphism f = ModuleMorphism::zero(m, n);
  std::size_t k = 0;
  for (auto& mat : f.maps)
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c) mat(r, c) = v[k++];
  return f;
}

int hom_space_dim(const Module& m, const Module& n) {
  int s = 0;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) s += m.dim(v) * n.dim(v);
  return s;
}

Module projective_sum(AlgebraPtr a, const std::vector<int>& tops) {
  const int n = a->vertex_count();
  std::vector<int> dims(n, 0);
  for (int t : tops)
    for (int w = 0; w < n; ++w) dims[w] += a->cartan(t, w);
  const Quiver& q = a->quiver();
  std::vector<Matrix> maps;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    Matrix m(dims[ar.target], dims[ar.source]);
    int ro = 0, co = 0;
    const Path arrow_path = Path::from_arrows(q, {ai});
    for (int t : tops) {
      const auto& src = a->paths_between(t, ar.source);
      const auto& tgt = a->paths_between(t, ar.target);
      for (std::size_t j = 0; j < src.size(); ++j) {
        const Vec nf = a->normal_form(concat(a->basis_path(src[j]), arrow_path));
        for (std::size_t i = 0; i < tgt.size(); ++i) m(ro + static_cast<int>(i), co + static_cast<int>(j)) = nf[tgt[i]];
      }
      ro += static_cast<int>(tgt.size());
      co += static_cast<int>(src.size());
    }
    maps.push_back(std::move(m));
  }
  return Module(std::move(a), std::move(dims), std::move(maps));
}

Module injective_sum(AlgebraPtr a, const std::vector<int>& tops) {
  const int n = a->vertex_count();
  std::vector<int> dims(n, 0);
  for (int t : tops)
    for (int w = 0; w < n; ++w) dims[w] += a->cartan(w, t);
  const Quiver& q = a->quiver();
  std::vector<Matrix> maps;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);  // ar: w -> u
    Matrix m(dims[ar.target], dims[ar.source]);
    int ro = 0, co = 0;
    const Path arrow_path = Path::from_arrows(q, {ai});
    for (int t : tops) {
      const auto& src = a->paths_between(ar.source, t);  // dual basis at w
      const auto& tgt = a->paths_between(ar.target, t);  // dual basis at u
      // (phi . a)(z) = phi(a z): entry [z][y] = coeff_y(a z)
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        const Vec nf = a->normal_form(concat(arrow_path, a->basis_path(tgt[i])));
        for (std::size_t j = 0; j < src.size(); ++j) m(ro + static_cast<int>(i), co + static_cast<int>(j)) = nf[src[j]];
      }
      ro += static_cast<int>(tgt.size());
      co += static_cast<int>(src.size());
    }
    maps.push_back(std::move(m));
  }
  return Module(std::move(a), std::move(dims), std::move(maps));
}

Module projective(AlgebraPtr a, int v) { return projective_sum(std::move(a), {v}); }
Module injective(AlgebraPtr a, int v) { return injective_sum(std::move(a), {v}); }

Module thin_module(AlgebraPtr a, const std::vector<int>& support) {
  const int n = a->vertex_count();
  std::vector<int> dims(n, 0);
  for (int v : support) {
    if (v < 0 || v >= n) throw InvalidInput("thin module: vertex out of range");
    dims[v] = 1;
  }
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows()) {
    Matrix m(dims[ar.target], dims[ar.source]);
    if (dims[ar.target] && dims[ar.source] && ar.source != ar.target) m(0, 0) = 1;  // loops act nilpotently
    maps.push_back(std::move(m));
  }
  return Module(std::move(a), std::move(dims), std::move(maps));
}

Module simple(AlgebraPtr a, int v) { return thin_module(std::move(a), {v}); }

Module interval(AlgebraPtr a, int lo, int hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<int> s;
  for (int v = lo; v <= hi; ++v) s.push_back(v);
  return thin_module(std::move(a), s);
}

Module direct_sum(const std::vector<Module>& ms, AlgebraPtr a) {
  const int n = a->vertex_count();
  const Quiver& q = a->quiver();
  std::vector<int> dims(n, 0);
  for (const auto& m : ms)
    for (int v = 0; v < n; ++v) dims[v] += m.dim(v);
  std::vector<Matrix> maps;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    Matrix m(dims[ar.target], dims[ar.source]);
    int r = 0, c = 0;
    for (const auto& x : ms) {
      m.set_block(r, c, x.map(ai));
      r += x.dim(ar.target);
      c += x.dim(ar.source);
    }
    maps.push_back(std::move(m));
  }
  return Module(std::move(a), std::move(dims), std::move(maps));
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}, a.algebra_ptr()); }

ModuleMorphism sum_inclusion(const std::vector<Module>& ms, const Module& sum, int i) {
  ModuleMorphism f = ModuleMorphism::zero(ms[i], sum);
  for (int v = 0; v < sum.algebra().vertex_count(); ++v) {
    int off = 0;
    for (int j = 0; j < i; ++j) off += ms[j].dim(v);
    for (int k = 0; k < ms[i].dim(v); ++k) f.maps[v](off + k, k) = 1;
  }
  return f;
}

ModuleMorphism sum_projection(const std::vector<Module>& ms, const Module& sum, int i) {
  ModuleMorphism f = ModuleMorphism::zero(sum, ms[i]);
  for (int v = 0; v < sum.algebra().vertex_count(); ++v) {
    int off = 0;
    for (int j = 0; j < i; ++j) off += ms[j].dim(v);
    for (int k = 0; k < ms[i].dim(v); ++k) f.maps[v](k, off + k) = 1;
  }
  return f;
}

ModuleMorphism from_projective_sum(const Module& p, const std::vector<int>& tops, const std::vector<Vec>& gens,
                                   const Module& m) {
  const BoundQuiverAlgebra& a = p.algebra();
  ModuleMorphism f = ModuleMorphism::zero(p, m);
  for (int w = 0; w < a.vertex_count(); ++w) {
    int col = 0;
    for (std::size_t i = 0; i < tops.size(); ++i)
      for (int b : a.paths_between(tops[i], w)) {
        const Vec img = m.basis_action(b) * gens[i];
        for (int r = 0; r < m.dim(w); ++r) f.maps[w](r, col) = img[r];
        ++col;
      }
  }
  return f;
}

ModuleMorphism submodule(const Module& m, const std::vector<Matrix>& spans) {
  const BoundQuiverAlgebra& a = m.algebra();
  std::vector<Matrix> bases;
  std::vector<int> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    bases.push_back(column_space(spans[v]));
    dims.push_back(bases.back().cols());
  }
  std::vector<Matrix> maps;
  for (int ai = 0; ai < a.quiver().arrow_count(); ++ai) {
    const Arrow& ar = a.quiver().arrow(ai);
    auto x = solve(bases[ar.target], m.map(ai) * bases[ar.source]);
    if (!x) throw InvalidInput("submodule: span is not closed under the arrows");
    maps.push_back(std::move(*x));
  }
  Module sub(m.algebra_ptr(), std::move(dims), std::move(maps));
  return ModuleMorphism{std::move(sub), m, std::move(bases)};
}

ModuleMorphism quotient(const Module& m, const std::vector<Matrix>& spans) {
  const BoundQuiverAlgebra& a = m.algebra();
  std::vector<Matrix> proj, sect;
  std::vector<int> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Matrix span = spans[v].rows() == m.dim(v) ? spans[v] : Matrix(m.dim(v), 0);
    Matrix p = left_annihilator(span);  // rows: functionals vanishing on the span
    auto s = solve(p, Matrix::identity(p.rows()));
    sect.push_back(std::move(*s));
    dims.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> maps;
  for (int ai = 0; ai < a.quiver().arrow_count(); ++ai) {
    const Arrow& ar = a.quiver().arrow(ai);
    maps.push_back(proj[ar.target] * m.map(ai) * sect[ar.source]);
  }
  Module q(m.algebra_ptr(), std::move(dims), std::move(maps));
  return ModuleMorphism{m, std::move(q), std::move(proj)};
}

ModuleMorphism kernel(const ModuleMorphism& f) {
  std::vector<Matrix> spans;
  for (const auto& mat : f.maps) spans.push_back(kernel_basis(mat));
  return submodule(f.source, spans);
}

ModuleMorphism image(const ModuleMorphism& f) { return submodule(f.target, f.maps); }

ModuleMorphism cokernel(const ModuleMorphism& f) { return quotient(f.target, f.maps); }

ModuleMorphism factor_through_epi(const ModuleMorphism& proj, const ModuleMorphism& g) {
  ModuleMorphism h = ModuleMorphism::zero(proj.target, g.target);
  for (std::size_t v = 0; v < h.maps.size(); ++v) {
    auto s = solve(proj.maps[v], Matrix::identity(proj.maps[v].rows()));
    if (!s) throw InvalidInput("factor_through_epi: map is not surjective");
    h.maps[v] = g.maps[v] * *s;
  }
  return h;
}

ModuleMorphism factor_through_mono(const ModuleMorphism& incl, const ModuleMorphism& g) {
  ModuleMorphism h = ModuleMorphism::zero(g.source, incl.source);
  for (std::size_t v = 0; v < h.maps.size(); ++v) {
    auto x = solve(incl.maps[v], g.maps[v]);
    if (!x) throw InvalidInput("factor_through_mono: image not contained");
    h.maps[v] = std::move(*x);
  }
  return h;
}

namespace {

// Linear system whose kernel is Hom(M, N) in flattened coordinates.
Matrix hom_system(const Module& m, const Module& n) {
  const BoundQuiverAlgebra& a = m.algebra();
  const int nv = a.vertex_count();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  int nrows = 0;
  for (const auto& ar : a.quiver().arrows()) nrows += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(nrows, off[nv]);
  int row = 0;
  for (int ai = 0; ai < a.quiver().arrow_count(); ++ai) {
    const Arrow& ar = a.quiver().arrow(ai);
    const int s = ar.source, t = ar.target;
    const Matrix &na = n.map(ai), &ma = m.map(ai);
    // (N_a phi_s - phi_t M_a)[i][j] = 0
    for (int i = 0; i < n.dim(t); ++i)
      for (int j = 0; j < m.dim(s); ++j, ++row) {
        for (int k = 0; k < n.dim(s); ++k) sys(row, off[s] + k * m.dim(s) + j) += na(i, k);
        for (int k = 0; k < m.dim(t); ++k) sys(row, off[t] + i * m.dim(t) + k) -= ma(k, j);
      }
  }
  return sys;
}

}  // namespace

std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InvalidInput("hom_basis: modules over different algebras");
  const Matrix k = kernel_basis(hom_system(m, n));
  std::vector<ModuleMorphism> out;
  out.reserve(k.cols());
  for (int c = 0; c < k.cols(); ++c) out.push_back(unflatten(m, n, k.column(c)));
  return out;
}

int hom_dim(const Module& m, const Module& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const Matrix sys = hom_system(m, n);
  return sys.cols() - rank(sys);
}

std::optional<Vec> hom_coordinates(const std::vector<ModuleMorphism>& basis, const ModuleMorphism& f) {
  const Vec target = f.flatten();
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  const auto x = solve(Matrix::from_columns(static_cast<int>(target.size()), cols),
                       Matrix::from_columns(static_cast<int>(target.size()), {target}));
  if (!x) return std::nullopt;
  return x->column(0);
}

Module dual_over(const Module& m, AlgebraPtr target) {
  const Quiver& q = m.algebra().quiver();
  const Quiver& qt = target->quiver();
  if (qt.vertex_count() != q.vertex_count() || qt.arrow_count() != q.arrow_count())
    throw InvalidInput("dual_over: quiver mismatch");
  std::vector<Matrix> maps;
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    if (qt.arrow(ai).source != q.arrow(ai).target || qt.arrow(ai).target != q.arrow(ai).source)
      throw InvalidInput("dual_over: target quiver is not the opposite");
    maps.push_back(m.map(ai).transpose());
  }
  return Module(std::move(target), m.dims(), std::move(maps));
}

Module dual(const Module& m) { return dual_over(m, m.algebra().opposite()); }

ModuleMorphism dual(const ModuleMorphism& f) {
  ModuleMorphism h{dual(f.target), dual(f.source), {}};
  for (const auto& mat : f.maps) h.maps.push_back(mat.transpose());
  return h;
}

bool is_isomorphic(const Module& m, const Module& n) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto basis = hom_basis(m, n);
  if (basis.empty()) return false;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> coef(0, field_characteristic() - 1);
  // isomorphisms form a dense open subset of Hom when one exists
  for (int attempt = 0; attempt < 4; ++attempt) {
    ModuleMorphism f = ModuleMorphism::zero(m, n);
    for (const auto& b : basis) f = f + Fp(coef(rng)) * b;
    if (f.is_iso()) return true;
  }
  return false;
}

}  // namespace silt

namespace silt {

namespace {

std::vector<int> surviving(int n, const std::vector<int>& cut) {
  std::vector<int> idx(n, 0);
  for (int v : cut) idx.at(v) = -1;
  int k = 0;
  for (auto& x : idx)
    if (x == 0) x = k++;
  return idx;
}

}  // namespace

Module restrict_to_quotient(const Module& m, AlgebraPtr quotient, const std::vector<int>& cut) {
  const BoundQuiverAlgebra& a = m.algebra();
  const auto idx = surviving(a.vertex_count(), cut);
  for (int v : cut)
    if (m.dim(v) != 0) throw InvalidInput("restrict_to_quotient: module does not vanish on the cut");
  std::vector<int> dims(quotient->vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    if (idx[v] >= 0) dims.at(idx[v]) = m.dim(v);
  std::vector<Matrix> maps;
  for (const auto& ar : quotient->quiver().arrows()) {
    const int ai = a.quiver().find_arrow(ar.name);
    if (ai < 0) throw InvalidInput("restrict_to_quotient: arrow '" + ar.name + "' missing");
    maps.push_back(m.map(ai));
  }
  return Module(std::move(quotient), std::move(dims), std::move(maps));
}

Module inflate_from_quotient(const Module& m, AlgebraPtr full, const std::vector<int>& cut) {
  const auto idx = surviving(full->vertex_count(), cut);
  std::vector<int> dims(full->vertex_count(), 0);
  for (int v = 0; v < full->vertex_count(); ++v)
    if (idx[v] >= 0) dims[v] = m.dim(idx[v]);
  std::vector<Matrix> maps;
  for (const auto& ar : full->quiver().arrows()) {
    const int qi = m.algebra().quiver().find_arrow(ar.name);
    maps.push_back(qi >= 0 ? m.map(qi) : Matrix(dims[ar.target], dims[ar.source]));
  }
  return Module(std::move(full), std::move(dims), std::move(maps));
}

}  // namespace silt

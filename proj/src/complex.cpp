#include "silt/complex.hpp"

#include <algorithm>

#include "silt/errors.hpp"
#include "silt/homological.hpp"

namespace silt {

ProjMap::ProjMap(AlgebraPtr a, std::vector<int> source, std::vector<int> target)
    : a_(std::move(a)), source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(source_.size() * target_.size(), Vec(a_->dim()));
}

bool ProjMap::is_zero() const noexcept {
  for (const auto& e : entries_)
    if (!silt::is_zero(e)) return false;
  return true;
}

int ProjMap::coordinate_count() const {
  int n = 0;
  for (int t : target_)
    for (int s : source_) n += a_->cartan(t, s);
  return n;
}

Vec ProjMap::flatten() const {
  Vec out;
  out.reserve(coordinate_count());
  for (std::size_t j = 0; j < target_.size(); ++j)
    for (std::size_t i = 0; i < source_.size(); ++i)
      for (int b : a_->paths_between(target_[j], source_[i])) out.push_back(entry(j, i)[b]);
  return out;
}

ProjMap ProjMap::unflatten(AlgebraPtr a, std::vector<int> source, std::vector<int> target, const Vec& v) {
  ProjMap f(std::move(a), std::move(source), std::move(target));
  std::size_t k = 0;
  for (std::size_t j = 0; j < f.target_.size(); ++j)
    for (std::size_t i = 0; i < f.source_.size(); ++i)
      for (int b : f.a_->paths_between(f.target_[j], f.source_[i])) f.entry(j, i)[b] = v[k++];
  return f;
}

ProjMap& ProjMap::operator+=(const ProjMap& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t k = 0; k < entries_[i].size(); ++k) entries_[i][k] += o.entries_[i][k];
  return *this;
}

ProjMap& ProjMap::operator*=(Fp s) {
  for (auto& e : entries_)
    for (auto& x : e) x *= s;
  return *this;
}

ProjMap compose(const ProjMap& g, const ProjMap& f) {
  ProjMap out(f.algebra_ptr(), f.source(), g.target());
  const auto& a = *f.algebra_ptr();
  for (std::size_t k = 0; k < g.target().size(); ++k)
    for (std::size_t i = 0; i < f.source().size(); ++i) {
      Vec& acc = out.entry(k, i);
      for (std::size_t j = 0; j < f.target().size(); ++j) {
        const Vec& x = g.entry(k, j);
        const Vec& y = f.entry(j, i);
        if (is_zero(x) || is_zero(y)) continue;
        const Vec p = a.multiply(x, y);
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
      }
    }
  return out;
}

ProjMap identity_map(const AlgebraPtr& a, const std::vector<int>& tops) {
  ProjMap f(a, tops, tops);
  for (std::size_t i = 0; i < tops.size(); ++i) f.entry(i, i)[a->idempotent(tops[i])] = 1;
  return f;
}

ProjMap block_map(const AlgebraPtr& a, const std::vector<std::vector<int>>& sources,
                  const std::vector<std::vector<int>>& targets, const std::vector<std::vector<const ProjMap*>>& blocks) {
  std::vector<int> src, tgt;
  std::vector<int> soff{0}, toff{0};
  for (const auto& s : sources) {
    src.insert(src.end(), s.begin(), s.end());
    soff.push_back(static_cast<int>(src.size()));
  }
  for (const auto& t : targets) {
    tgt.insert(tgt.end(), t.begin(), t.end());
    toff.push_back(static_cast<int>(tgt.size()));
  }
  ProjMap out(a, src, tgt);
  for (std::size_t bj = 0; bj < targets.size(); ++bj)
    for (std::size_t bi = 0; bi < sources.size(); ++bi) {
      const ProjMap* m = blocks[bj][bi];
      if (!m) continue;
      for (std::size_t j = 0; j < targets[bj].size(); ++j)
        for (std::size_t i = 0; i < sources[bi].size(); ++i) out.entry(toff[bj] + j, soff[bi] + i) = m->entry(j, i);
    }
  return out;
}

Module as_module(const AlgebraPtr& a, const std::vector<int>& tops) { return projective_sum(a, tops); }

ModuleMorphism as_morphism(const ProjMap& f) {
  const auto& a = f.algebra_ptr();
  const Module p = as_module(a, f.source());
  const Module q = as_module(a, f.target());
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    Vec g;
    for (std::size_t j = 0; j < f.target().size(); ++j)
      for (int b : a->paths_between(f.target()[j], f.source()[i])) g.push_back(f.entry(j, i)[b]);
    gens.push_back(std::move(g));
  }
  return from_projective_sum(p, f.source(), gens, q);
}

ProjMap from_morphism(const ModuleMorphism& f, const std::vector<int>& source, const std::vector<int>& target) {
  const AlgebraPtr& a = f.source.algebra_ptr();
  ProjMap out(a, source, target);
  for (std::size_t i = 0; i < source.size(); ++i) {
    const int v = source[i];
    // position of the i-th generator in (P source)_v
    int pos = 0;
    for (std::size_t k = 0; k < i; ++k) pos += a->cartan(source[k], v);
    const auto& own = a->paths_between(v, v);
    pos += static_cast<int>(std::find(own.begin(), own.end(), a->idempotent(v)) - own.begin());
    const Vec col = f.maps[v].column(pos);
    int r = 0;
    for (std::size_t j = 0; j < target.size(); ++j)
      for (int b : a->paths_between(target[j], v)) out.entry(j, i)[b] = col[r++];
  }
  return out;
}

std::vector<int> ProjComplex::term(int degree) const {
  if (degree < lo || degree > hi()) return {};
  return terms[degree - lo];
}

ProjMap ProjComplex::differential(int degree) const {
  if (degree >= lo && degree < hi()) return d[degree - lo];
  return ProjMap(algebra, term(degree), term(degree + 1));
}

bool ProjComplex::is_complex() const {
  for (int k = lo; k + 1 < hi(); ++k)
    if (!compose(differential(k + 1), differential(k)).is_zero()) return false;
  return true;
}

namespace {

void trim(ProjComplex& c) {
  while (!c.terms.empty() && c.terms.back().empty()) {
    c.terms.pop_back();
    if (!c.d.empty()) c.d.pop_back();
  }
  while (!c.terms.empty() && c.terms.front().empty()) {
    c.terms.erase(c.terms.begin());
    if (!c.d.empty()) c.d.erase(c.d.begin());
    ++c.lo;
  }
  if (c.terms.empty()) {
    c.lo = 0;
    c.d.clear();
  }
}

}  // namespace

ProjComplex zero_complex(const AlgebraPtr& a) { return ProjComplex{a, 0, {}, {}}; }

ProjComplex direct_sum(const std::vector<ProjComplex>& cs) {
  if (cs.empty()) throw InvalidInput("direct_sum of no complexes");
  ProjComplex out = zero_complex(cs[0].algebra);
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& c : cs)
    if (!c.terms.empty()) {
      lo = any ? std::min(lo, c.lo) : c.lo;
      hi = any ? std::max(hi, c.hi()) : c.hi();
      any = true;
    }
  if (!any) return out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    std::vector<int> t;
    for (const auto& c : cs) {
      const auto ck = c.term(k);
      t.insert(t.end(), ck.begin(), ck.end());
    }
    out.terms.push_back(std::move(t));
  }
  for (int k = lo; k < hi; ++k) {
    std::vector<std::vector<int>> src, tgt;
    std::vector<ProjMap> ds;
    for (const auto& c : cs) {
      src.push_back(c.term(k));
      tgt.push_back(c.term(k + 1));
      ds.push_back(c.differential(k));
    }
    std::vector<std::vector<const ProjMap*>> blocks(cs.size(), std::vector<const ProjMap*>(cs.size(), nullptr));
    for (std::size_t i = 0; i < cs.size(); ++i) blocks[i][i] = &ds[i];
    out.d.push_back(block_map(out.algebra, src, tgt, blocks));
  }
  trim(out);
  return out;
}

ProjComplex shift(const ProjComplex& c, int k) {
  ProjComplex out = c;
  out.lo = c.lo - k;
  if (k % 2 != 0)
    for (auto& m : out.d) m *= Fp(-1);
  return out;
}

ProjComplex resolution_complex(const Module& m, int s) {
  const AlgebraPtr& a = m.algebra_ptr();
  ProjComplex c = zero_complex(a);
  if (m.is_zero()) return c;
  std::vector<std::vector<int>> tops;
  std::vector<ProjMap> maps;  // maps[i] : P_{i+1} -> P_i
  ProjectiveCover cover = projective_cover(m);
  tops.push_back(cover.tops);
  Module omega = kernel(cover.map).source;
  ModuleMorphism incl = kernel(cover.map);
  while (!omega.is_zero()) {
    if (static_cast<int>(tops.size()) > kResolutionCap) throw InvalidInput("resolution does not terminate");
    ProjectiveCover next = projective_cover(omega);
    maps.push_back(from_morphism(compose(incl, next.map), next.tops, tops.back()));
    tops.push_back(next.tops);
    incl = kernel(next.map);
    omega = incl.source;
  }
  const int len = static_cast<int>(tops.size());
  c.lo = -s - (len - 1);
  for (int i = len - 1; i >= 0; --i) c.terms.push_back(tops[i]);
  for (int i = len - 2; i >= 0; --i) c.d.push_back(maps[i]);
  return c;
}

ChainMap zero_chain_map(const ProjComplex& c, const ProjComplex& d) {
  ChainMap f;
  f.lo = c.lo;
  for (int k = c.lo; k <= c.hi(); ++k) f.f.emplace_back(c.algebra, c.term(k), d.term(k));
  return f;
}

namespace {

ProjMap component(const ChainMap& f, const ProjComplex& c, const ProjComplex& d, int k) {
  if (k >= f.lo && k < f.lo + static_cast<int>(f.f.size())) return f.f[k - f.lo];
  return ProjMap(c.algebra, c.term(k), d.term(k));
}

}  // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f, const ProjComplex& c, const ProjComplex& d,
                 const ProjComplex& e) {
  ChainMap out = zero_chain_map(c, e);
  for (int k = c.lo; k <= c.hi(); ++k)
    out.f[k - c.lo] = compose(component(g, d, e, k), component(f, c, d, k));
  return out;
}

bool is_chain_map(const ChainMap& f, const ProjComplex& c, const ProjComplex& d) {
  const int lo = std::min(c.lo, d.lo) - 1, hi = std::max(c.hi(), d.hi()) + 1;
  for (int k = lo; k <= hi; ++k) {
    ProjMap lhs = compose(d.differential(k), component(f, c, d, k));
    ProjMap rhs = compose(component(f, c, d, k + 1), c.differential(k));
    rhs *= Fp(-1);
    lhs += rhs;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

HomK::HomK(const ProjComplex& c, const ProjComplex& d) : c_(c), d_(d) {
  const AlgebraPtr& a = c.algebra;
  for (int k = c.lo; k <= c.hi(); ++k)
    if (!c.term(k).empty() && !d.term(k).empty()) degrees_.push_back(k);
  std::vector<int> off{0};
  for (int k : degrees_) off.push_back(off.back() + ProjMap(a, c.term(k), d.term(k)).coordinate_count());
  const int nvar = off.back();

  // constraint degrees: k with C^k and D^{k+1} nonzero
  std::vector<int> cons;
  for (int k = c.lo; k <= c.hi(); ++k)
    if (!c.term(k).empty() && !d.term(k + 1).empty()) cons.push_back(k);
  auto constraint = [&](const ChainMap& f) {
    Vec out;
    for (int k : cons) {
      ProjMap lhs = compose(d.differential(k), component(f, c, d, k));
      ProjMap rhs = compose(component(f, c, d, k + 1), c.differential(k));
      rhs *= Fp(-1);
      lhs += rhs;
      const Vec v = lhs.flatten();
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
  std::vector<Vec> zcols;
  for (int x = 0; x < nvar; ++x) {
    Vec u(nvar);
    u[x] = 1;
    zcols.push_back(constraint(unflatten(u)));
  }
  int zrows = 0;
  for (int k : cons) zrows += ProjMap(a, c.term(k), d.term(k + 1)).coordinate_count();
  const Matrix cycles = kernel_basis(Matrix::from_columns(zrows, zcols));

  // boundaries d h + h d
  std::vector<Vec> bcols;
  for (int k = c.lo; k <= c.hi(); ++k) {
    if (c.term(k).empty() || d.term(k - 1).empty()) continue;
    const ProjMap zero(a, c.term(k), d.term(k - 1));
    for (int x = 0; x < zero.coordinate_count(); ++x) {
      Vec u(zero.coordinate_count());
      u[x] = 1;
      const ProjMap h = ProjMap::unflatten(a, c.term(k), d.term(k - 1), u);
      ChainMap img = zero_chain_map(c, d);
      // degree k: d_D^{k-1} h; degree k-1: h d_C^{k-1}
      img.f[k - c.lo] += compose(d.differential(k - 1), h);
      if (k - 1 >= c.lo) img.f[k - 1 - c.lo] += compose(h, c.differential(k - 1));
      bcols.push_back(flatten(img));
    }
  }
  const Matrix bounds = Matrix::from_columns(nvar, bcols);
  const auto picked = extend_basis(bounds, cycles);
  std::vector<Vec> frame_cols;
  for (int p : picked) {
    frame_cols.push_back(cycles.column(p));
    basis_.push_back(unflatten(cycles.column(p)));
  }
  for (const auto& b : bcols) frame_cols.push_back(b);
  frame_ = Matrix::from_columns(nvar, frame_cols);
}

Vec HomK::flatten(const ChainMap& f) const {
  Vec out;
  for (int k : degrees_) {
    const Vec v = component(f, c_, d_, k).flatten();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

ChainMap HomK::unflatten(const Vec& v) const {
  ChainMap f = zero_chain_map(c_, d_);
  std::size_t pos = 0;
  for (int k : degrees_) {
    const int n = ProjMap(c_.algebra, c_.term(k), d_.term(k)).coordinate_count();
    f.f[k - c_.lo] = ProjMap::unflatten(c_.algebra, c_.term(k), d_.term(k), Vec(v.begin() + pos, v.begin() + pos + n));
    pos += n;
  }
  return f;
}

std::optional<Vec> HomK::coordinates(const ChainMap& f) const {
  if (!is_chain_map(f, c_, d_)) return std::nullopt;
  const Vec v = flatten(f);
  if (frame_.cols() == 0) return Vec{};
  const auto x = solve(frame_, Matrix::from_columns(static_cast<int>(v.size()), {v}));
  if (!x) return std::nullopt;
  Vec out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = (*x)(i, 0);
  return out;
}

ChainMap HomK::combination(const Vec& coeffs) const {
  ChainMap f = zero_chain_map(c_, d_);
  for (int i = 0; i < dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t k = 0; k < f.f.size(); ++k) {
      ProjMap t = basis_[i].f[k];
      t *= coeffs[i];
      f.f[k] += t;
    }
  }
  return f;
}

Cone mapping_cone(const ChainMap& f, const ProjComplex& c, const ProjComplex& d) {
  const AlgebraPtr& a = d.algebra;
  Cone out;
  ProjComplex& k = out.complex;
  k.algebra = a;
  const bool c_empty = c.terms.empty(), d_empty = d.terms.empty();
  if (c_empty && d_empty) {
    out.complex = zero_complex(a);
    return out;
  }
  const int lo = c_empty ? d.lo : d_empty ? c.lo - 1 : std::min(c.lo - 1, d.lo);
  const int hi = c_empty ? d.hi() : d_empty ? c.hi() - 1 : std::max(c.hi() - 1, d.hi());
  k.lo = lo;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> t = c.term(n + 1);
    const auto dn = d.term(n);
    t.insert(t.end(), dn.begin(), dn.end());
    k.terms.push_back(std::move(t));
  }
  for (int n = lo; n < hi; ++n) {
    ProjMap mdc = c.differential(n + 1);
    mdc *= Fp(-1);
    const ProjMap fn = component(f, c, d, n + 1);
    const ProjMap dd = d.differential(n);
    k.d.push_back(block_map(a, {c.term(n + 1), d.term(n)}, {c.term(n + 2), d.term(n + 1)},
                            {{&mdc, nullptr}, {&fn, &dd}}));
  }
  // structure maps, before trimming so degrees line up
  const ProjComplex c1 = shift(c, 1);
  out.into = zero_chain_map(d, k);
  for (int n = d.lo; n <= d.hi(); ++n) {
    const ProjMap id = identity_map(a, d.term(n));
    out.into.f[n - d.lo] = block_map(a, {d.term(n)}, {c.term(n + 1), d.term(n)}, {{nullptr}, {&id}});
  }
  out.out = zero_chain_map(k, c1);
  for (int n = lo; n <= hi; ++n) {
    const ProjMap id = identity_map(a, c.term(n + 1));
    out.out.f[n - lo] = block_map(a, {c.term(n + 1), d.term(n)}, {c1.term(n)}, {{&id, nullptr}});
  }
  return out;
}

Module cohomology(const ProjComplex& c, int degree) {
  const AlgebraPtr& a = c.algebra;
  const auto tk = c.term(degree);
  if (tk.empty()) return Module::zero(a);
  const ModuleMorphism out = as_morphism(c.differential(degree));
  const ModuleMorphism in = as_morphism(c.differential(degree - 1));
  const ModuleMorphism ker = kernel(out);
  const ModuleMorphism into_ker = factor_through_mono(ker, in);
  return cokernel(into_ker).target;
}

}  // namespace silt

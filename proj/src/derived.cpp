#include "silt/derived.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "silt/classify.hpp"
#include "silt/errors.hpp"
#include "silt/homological.hpp"

namespace silt {

namespace {

ProjMap component(const ChainMap& f, const ProjComplex& c, const ProjComplex& d, int k) {
  if (k >= f.lo && k < f.lo + static_cast<int>(f.f.size())) return f.f[k - f.lo];
  return ProjMap(c.algebra, c.term(k), d.term(k));
}

ChainMap identity_chain_map(const ProjComplex& c) {
  ChainMap f;
  f.lo = c.lo;
  for (int k = c.lo; k <= c.hi(); ++k) f.f.push_back(identity_map(c.algebra, c.term(k)));
  return f;
}

// Hom(A[s], B[t]) from the module level.
int pair_hom(const DSummand& a, const DSummand& b) {
  if (b.shift == a.shift) return hom_dim(a.module, b.module);
  if (b.shift == a.shift + 1) return ext1_dim(a.module, b.module);
  return 0;
}

}  // namespace

DerivedObject DerivedObject::zero(AlgebraPtr h) {
  DerivedObject x;
  x.complex_ = zero_complex(h);
  x.h_ = std::move(h);
  return x;
}

DerivedObject DerivedObject::from_summands(AlgebraPtr h, const std::vector<DSummand>& summands) {
  DerivedObject x = zero(h);
  std::vector<ProjComplex> parts;
  for (const auto& s : summands) {
    if (s.module.is_zero()) continue;
    if (!same_algebra(s.module.algebra(), *h)) throw InvalidInput("derived object: summand over another algebra");
    auto pieces = decompose(s.module);
    if (pieces.size() == 1) pieces[0] = s.module;  // keep the caller's basis
    for (auto& m : pieces) {
      if (projective_dimension(m) > 1) throw InvalidInput("derived objects need a hereditary algebra");
      parts.push_back(resolution_complex(m, s.shift));
      x.summands_.push_back({std::move(m), s.shift});
    }
  }
  if (!parts.empty()) x.complex_ = direct_sum(parts);
  return x;
}

DerivedObject DerivedObject::from_complex(const ProjComplex& c) {
  std::vector<DSummand> s;
  for (int k = c.lo; k <= c.hi(); ++k) {
    Module h = cohomology(c, k);
    if (!h.is_zero()) s.push_back({std::move(h), -k});
  }
  return from_summands(c.algebra, s);
}

int DerivedObject::min_shift() const {
  int m = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i) m = i ? std::min(m, summands_[i].shift) : summands_[i].shift;
  return m;
}

int DerivedObject::max_shift() const {
  int m = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i) m = i ? std::max(m, summands_[i].shift) : summands_[i].shift;
  return m;
}

DerivedObject DerivedObject::summand(int i) const { return from_summands(h_, {summands_.at(i)}); }

DerivedObject DerivedObject::shifted(int k) const {
  auto s = summands_;
  for (auto& x : s) x.shift += k;
  return from_summands(h_, s);
}

DerivedObject DerivedObject::reordered(const std::vector<int>& order) const {
  std::vector<DSummand> s;
  for (int i : order) s.push_back(summands_.at(i));
  return from_summands(h_, s);
}

DerivedObject DerivedObject::without(int i) const {
  auto s = summands_;
  s.erase(s.begin() + i);
  return from_summands(h_, s);
}

DerivedObject DerivedObject::replaced(int i, const DerivedObject& x) const {
  auto s = summands_;
  s.erase(s.begin() + i);
  s.insert(s.begin() + i, x.summands().begin(), x.summands().end());
  return from_summands(h_, s);
}

DerivedObject direct_sum(const DerivedObject& x, const DerivedObject& y) {
  auto s = x.summands();
  s.insert(s.end(), y.summands().begin(), y.summands().end());
  return DerivedObject::from_summands(x.algebra_ptr() ? x.algebra_ptr() : y.algebra_ptr(), s);
}

std::string summand_label(const DSummand& s) {
  std::ostringstream os;
  os << module_label(s.module);
  if (s.shift != 0) os << "[" << s.shift << "]";
  return os.str();
}

std::string object_label(const DerivedObject& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& s : x.summands()) out += (out.empty() ? "" : " + ") + summand_label(s);
  return out;
}

bool same_class(const DSummand& a, const DSummand& b) {
  return a.shift == b.shift && a.module.dims() == b.module.dims() && is_isomorphic(a.module, b.module);
}

int dhom_dim(const DerivedObject& x, const DerivedObject& y) {
  int n = 0;
  for (const auto& a : x.summands())
    for (const auto& b : y.summands()) n += pair_hom(a, b);
  return n;
}

std::vector<DerivedMorphism> dhom_basis(const DerivedObject& x, const DerivedObject& y) {
  const HomK h(x.complex(), y.complex());
  std::vector<DerivedMorphism> out;
  for (const auto& f : h.basis()) out.push_back({x, y, f});
  return out;
}

DerivedMorphism compose(const DerivedMorphism& g, const DerivedMorphism& f) {
  return {f.source, g.target, compose(g.map, f.map, f.source.complex(), f.target.complex(), g.target.complex())};
}

Triangle cone(const DerivedMorphism& f) {
  Cone c = mapping_cone(f.map, f.source.complex(), f.target.complex());
  Triangle t;
  t.cone = DerivedObject::from_complex(c.complex);
  t.raw = std::move(c.complex);
  t.into = std::move(c.into);
  t.out = std::move(c.out);
  return t;
}

std::vector<int> canonical_ordering(const DerivedObject& t) {
  const int m = t.size();
  const auto& s = t.summands();
  std::vector<int> out;
  std::set<int> shifts;
  for (const auto& x : s) shifts.insert(x.shift);
  for (int sh : shifts) {
    std::vector<int> group;
    for (int i = 0; i < m; ++i)
      if (s[i].shift == sh) group.push_back(i);
    std::map<int, std::vector<int>> succ;
    std::map<int, int> indeg;
    for (int i : group) indeg[i] = 0;
    for (int i : group)
      for (int j : group) {
        if (i == j || same_class(s[i], s[j])) continue;
        if (hom_dim(s[i].module, s[j].module) > 0) {
          succ[i].push_back(j);
          ++indeg[j];
        }
      }
    auto before = [&](int a, int b) {
      const auto &da = s[a].module.dims(), &db = s[b].module.dims();
      return da != db ? da < db : a < b;
    };
    std::vector<int> ready;
    for (int i : group)
      if (indeg[i] == 0) ready.push_back(i);
    std::size_t placed = 0;
    while (!ready.empty()) {
      auto it = std::min_element(ready.begin(), ready.end(), before);
      const int v = *it;
      ready.erase(it);
      out.push_back(v);
      ++placed;
      for (int w : succ[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (placed != group.size())
      throw CycleDetected("Hom among summands in shift " + std::to_string(sh) + " has a cycle");
  }
  return out;
}

namespace {

// Hom(T_i, T_j[m]) = 0 for all m >= 1.
bool positive_vanishing(const DSummand& a, const DSummand& b, std::string* why) {
  // m = s_a - s_b picks Hom_H, m = s_a - s_b + 1 picks Ext^1
  if (a.shift > b.shift && hom_dim(a.module, b.module) > 0) {
    if (why) *why = "Hom(" + summand_label(a) + ", " + summand_label(b) + "[" + std::to_string(a.shift - b.shift) + "]) != 0";
    return false;
  }
  if (a.shift >= b.shift && ext1_dim(a.module, b.module) > 0) {
    if (why)
      *why = "Hom(" + summand_label(a) + ", " + summand_label(b) + "[" + std::to_string(a.shift - b.shift + 1) + "]) != 0";
    return false;
  }
  return true;
}

}  // namespace

SiltingCertificate is_presilting(const DerivedObject& t) {
  SiltingCertificate c;
  c.rank = t.algebra_ptr() ? t.algebra_ptr()->vertex_count() : 0;
  const auto& s = t.summands();
  const int m = t.size();
  c.presilting = true;
  for (int i = 0; i < m && c.presilting; ++i)
    for (int j = 0; j < m; ++j) {
      if (!positive_vanishing(s[i], s[j], &c.failure)) {
        c.presilting = false;
        break;
      }
      c.checks.push_back(std::to_string(i + 1) + " " + std::to_string(j + 1));
    }
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) {
    bool dup = false;
    for (int r : reps) dup = dup || same_class(s[i], s[r]);
    if (dup)
      c.basic = false;
    else
      reps.push_back(i);
  }
  c.distinct_classes = static_cast<int>(reps.size());
  return c;
}

SiltingCertificate is_silting(const DerivedObject& t) {
  SiltingCertificate c = is_presilting(t);
  c.silting = c.presilting && c.distinct_classes == c.rank;
  if (c.presilting && !c.silting)
    c.failure = std::to_string(c.distinct_classes) + " summand classes, rank " + std::to_string(c.rank);
  return c;
}

namespace {

struct Approximation {
  std::vector<int> picked;   // candidate index per copy
  DerivedObject other;       // sum of the picked candidates
  ChainMap map;              // M -> other (left) or other -> M (right)
};

// Minimal left (right = false) or right add(cands)-approximation of m.
// Candidates are indecomposable and pairwise non-isomorphic.
Approximation approximate(const DerivedObject& m, const std::vector<DerivedObject>& cands, bool left) {
  const AlgebraPtr& h = m.algebra_ptr();
  const int nc = static_cast<int>(cands.size());
  // entries: basis maps between m and each candidate
  std::vector<HomK> with_m;
  for (const auto& c : cands)
    with_m.emplace_back(left ? HomK(m.complex(), c.complex()) : HomK(c.complex(), m.complex()));
  struct Entry {
    int cand;
    ChainMap map;
  };
  std::vector<Entry> entries;
  for (int j = 0; j < nc; ++j)
    for (const auto& f : with_m[j].basis()) entries.push_back({j, f});

  // image vectors of every entry in each Hom(m, cand_l) (left) or Hom(cand_l, m) (right)
  const int ne = static_cast<int>(entries.size());
  std::vector<std::vector<std::vector<Vec>>> img(ne, std::vector<std::vector<Vec>>(nc));
  for (int l = 0; l < nc; ++l)
    for (int e = 0; e < ne; ++e) {
      const int j = entries[e].cand;
      if (left) {
        const HomK between(cands[j].complex(), cands[l].complex());
        for (const auto& g : between.basis()) {
          const ChainMap gf = compose(g, entries[e].map, m.complex(), cands[j].complex(), cands[l].complex());
          img[e][l].push_back(*with_m[l].coordinates(gf));
        }
      } else {
        const HomK between(cands[l].complex(), cands[j].complex());
        for (const auto& g : between.basis()) {
          const ChainMap fg = compose(entries[e].map, g, cands[l].complex(), cands[j].complex(), m.complex());
          img[e][l].push_back(*with_m[l].coordinates(fg));
        }
      }
    }
  auto universal = [&](const std::vector<bool>& keep) {
    for (int l = 0; l < nc; ++l) {
      SpanBuilder span(with_m[l].dim());
      for (int e = 0; e < ne; ++e)
        if (keep[e])
          for (const auto& v : img[e][l]) span.add(v);
      if (span.rank() != with_m[l].dim()) return false;
    }
    return true;
  };
  std::vector<bool> keep(ne, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = ne - 1; e >= 0; --e) {
      if (!keep[e]) continue;
      keep[e] = false;
      if (universal(keep))
        changed = true;
      else
        keep[e] = true;
    }
  }

  Approximation out;
  std::vector<DSummand> parts;
  std::vector<const Entry*> used;
  for (int e = 0; e < ne; ++e)
    if (keep[e]) {
      out.picked.push_back(entries[e].cand);
      parts.push_back(cands[entries[e].cand].summands().front());
      used.push_back(&entries[e]);
    }
  out.other = DerivedObject::from_summands(h, parts);
  const ProjComplex& mc = m.complex();
  const ProjComplex& oc = out.other.complex();
  // the sum's complex is the direct sum of the candidates' complexes in this order
  if (left) {
    out.map = zero_chain_map(mc, oc);
    for (int k = mc.lo; k <= mc.hi(); ++k) {
      std::vector<std::vector<int>> targets;
      std::vector<ProjMap> comps;
      for (const Entry* e : used) {
        targets.push_back(cands[e->cand].complex().term(k));
        comps.push_back(component(e->map, mc, cands[e->cand].complex(), k));
      }
      std::vector<std::vector<const ProjMap*>> blocks;
      for (const auto& c : comps) blocks.push_back({&c});
      out.map.f[k - mc.lo] = used.empty() ? ProjMap(h, mc.term(k), {}) : block_map(h, {mc.term(k)}, targets, blocks);
    }
  } else {
    out.map = zero_chain_map(oc, mc);
    for (int k = oc.lo; k <= oc.hi(); ++k) {
      std::vector<std::vector<int>> sources;
      std::vector<ProjMap> comps;
      for (const Entry* e : used) {
        sources.push_back(cands[e->cand].complex().term(k));
        comps.push_back(component(e->map, cands[e->cand].complex(), mc, k));
      }
      std::vector<std::vector<const ProjMap*>> blocks(1);
      for (const auto& c : comps) blocks[0].push_back(&c);
      out.map.f[k - oc.lo] = block_map(h, sources, {mc.term(k)}, blocks);
    }
  }
  if (!(left ? is_chain_map(out.map, mc, oc) : is_chain_map(out.map, oc, mc)))
    throw SiltError("approximation is not a chain map");
  return out;
}

std::vector<DerivedObject> other_classes(const DerivedObject& t, int position) {
  std::vector<DerivedObject> out;
  std::vector<int> reps;
  const auto& s = t.summands();
  for (int i = 0; i < t.size(); ++i) {
    if (same_class(s[i], s[position])) continue;
    bool dup = false;
    for (int r : reps) dup = dup || same_class(s[i], s[r]);
    if (dup) continue;
    reps.push_back(i);
    out.push_back(t.summand(i));
  }
  return out;
}

void require_silting(const DerivedObject& t, int position) {
  if (position < 0 || position >= t.size()) throw InvalidInput("mutation: no such summand");
  const auto c = is_silting(t);
  if (!c.silting) throw InvalidInput("mutation needs a silting object: " + c.failure);
}

}  // namespace

Mutation left_mutation(const DerivedObject& t, int position) {
  require_silting(t, position);
  const DerivedObject m = t.summand(position);
  Approximation a = approximate(m, other_classes(t, position), true);
  const Triangle tr = cone(DerivedMorphism{m, a.other, a.map});
  if (tr.cone.size() != 1) throw SiltError("left mutation: cone is not indecomposable");
  Mutation out{t.replaced(position, tr.cone), a.other, tr.cone};
  const auto c = is_silting(out.result);
  if (!c.silting) throw SiltError("left mutation lost silting: " + c.failure);
  return out;
}

Mutation right_mutation(const DerivedObject& t, int position) {
  require_silting(t, position);
  const DerivedObject m = t.summand(position);
  Approximation a = approximate(m, other_classes(t, position), false);
  const Triangle tr = cone(DerivedMorphism{a.other, m, a.map});
  const DerivedObject n = tr.cone.shifted(-1);
  if (n.size() != 1) throw SiltError("right mutation: cocone is not indecomposable");
  Mutation out{t.replaced(position, n), a.other, n};
  const auto c = is_silting(out.result);
  if (!c.silting) throw SiltError("right mutation lost silting: " + c.failure);
  return out;
}

bool hom_orthogonal(const DerivedObject& d, const DerivedObject& y) {
  // Hom(A[s], B[t + i]) over all i reduces to Hom_H(A, B) and Ext^1_H(A, B)
  for (const auto& a : d.summands())
    for (const auto& b : y.summands())
      if (hom_dim(a.module, b.module) > 0 || ext1_dim(a.module, b.module) > 0) return false;
  return true;
}

std::vector<Module> perpendicular_category(const DerivedObject& d, const IndecCatalog& cat) {
  std::vector<Module> out;
  for (const auto& m : cat.modules)
    if (hom_orthogonal(d, DerivedObject::from_summands(cat.algebra, {{m, 0}}))) out.push_back(m);
  return out;
}

namespace {

bool compatible(const std::vector<DSummand>& cur, const DSummand& x) {
  for (const auto& s : cur) {
    if (same_class(s, x)) return false;
    if (!positive_vanishing(s, x, nullptr) || !positive_vanishing(x, s, nullptr)) return false;
  }
  return positive_vanishing(x, x, nullptr);
}

// p = 1 + number of leading N_i with Hom(X, N_i[Z]) = 0
int counter(const DerivedObject& x, const DerivedObject& n_ordered) {
  int p = 1;
  for (int i = 0; i < n_ordered.size(); ++i) {
    if (!hom_orthogonal(x, n_ordered.summand(i))) break;
    ++p;
  }
  return p;
}

bool in_add(const DerivedObject& a, const DSummand& x) {
  for (const auto& s : a.summands())
    if (same_class(s, x)) return true;
  return false;
}

}  // namespace

PerpCompletion perp_completion(const DerivedObject& n, const IndecCatalog& cat, int window_cap) {
  const AlgebraPtr& h = cat.algebra;
  const int rank = h->vertex_count();
  const auto cert = is_presilting(n);
  if (!cert.presilting) throw InvalidInput("perp_completion: input is not presilting: " + cert.failure);
  PerpCompletion out;
  out.complement = DerivedObject::zero(h);
  out.initial = n;
  if (cert.distinct_classes == rank) return out;

  // greedy completion inside a shift window, widened on failure
  const int lo0 = n.is_zero() ? -1 : n.min_shift() - 1;
  const int hi0 = n.is_zero() ? 1 : n.max_shift() + 1;
  std::vector<DSummand> added;
  bool found = false;
  for (int w = 0; w <= window_cap && !found; ++w) {
    std::vector<DSummand> cur = n.summands();
    added.clear();
    int classes = cert.distinct_classes;
    for (int s = lo0 - w; s <= hi0 + w && classes < rank; ++s)
      for (const auto& m : cat.modules) {
        const DSummand x{m, s};
        if (!compatible(cur, x)) continue;
        cur.push_back(x);
        added.push_back(x);
        if (++classes == rank) break;
      }
    found = classes == rank;
  }
  if (!found) throw CompletionSearchExhausted("no completion within shift window cap");
  out.initial = direct_sum(n, DerivedObject::from_summands(h, added));

  // replace each complement summand by one orthogonal to N, one at a time
  std::vector<DSummand> rest = added, done;
  while (!rest.empty()) {
    DSummand x = rest.front();
    rest.erase(rest.begin());
    std::vector<DSummand> almost = n.summands();
    almost.insert(almost.end(), done.begin(), done.end());
    almost.insert(almost.end(), rest.begin(), rest.end());
    const DerivedObject nn = DerivedObject::from_summands(h, almost);
    const DerivedObject ordered = nn.reordered(canonical_ordering(nn));
    std::vector<int> trace;
    DerivedObject xo = DerivedObject::from_summands(h, {x});
    int p = counter(xo, ordered);
    trace.push_back(p);
    const int cap = 4 * rank + 4;
    while (p < rank) {
      if (static_cast<int>(trace.size()) > cap) throw ApproximationDiverged("perp completion counter stalled");
      Mutation mu = left_mutation(direct_sum(ordered, xo), ordered.size());
      ++out.mutations;
      // zero approximation: the mutation is X -> X[1] and p cannot move yet;
      // Hom(X, N[m]) lives in m <= 0 so a few shifts reach a nonzero map
      for (int guard = 0; mu.approximation.is_zero(); ++guard) {
        if (guard > 2 * rank + 2 + n.max_shift() - n.min_shift()) throw ApproximationDiverged("perp completion: X never meets N");
        xo = mu.exchanged;
        mu = left_mutation(direct_sum(ordered, xo), ordered.size());
        ++out.mutations;
      }
      if (in_add(mu.approximation, ordered.summands()[p - 1])) {
        xo = mu.exchanged;
      } else {
        const DerivedObject t2 = direct_sum(ordered, mu.exchanged);
        xo = left_mutation(t2, t2.size() - 1).exchanged;
        ++out.mutations;
      }
      const int q = counter(xo, ordered);
      if (q <= p)
        throw SiltError("perp completion counter did not increase: " + object_label(ordered) + " with " +
                        object_label(xo) + ", p " + std::to_string(p) + " -> " + std::to_string(q));
      p = q;
      trace.push_back(p);
    }
    out.p_trace.push_back(std::move(trace));
    done.push_back(xo.summands().front());
  }
  out.complement = DerivedObject::from_summands(h, done);
  const auto final_cert = is_silting(direct_sum(n, out.complement));
  if (!final_cert.silting) throw SiltError("perp completion is not silting: " + final_cert.failure);
  if (!hom_orthogonal(out.complement, n)) throw SiltError("perp completion is not orthogonal");
  return out;
}

HomTable derived_hom_table(const std::vector<DerivedObject>& objs) {
  const int m = static_cast<int>(objs.size());
  auto homs = std::make_shared<std::vector<std::vector<HomK>>>();
  for (int a = 0; a < m; ++a) {
    homs->emplace_back();
    for (int b = 0; b < m; ++b) (*homs)[a].emplace_back(objs[a].complex(), objs[b].complex());
  }
  HomTable t;
  t.count = m;
  t.dims.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.dims[a][b] = (*homs)[a][b].dim();
  for (int a = 0; a < m; ++a) t.identity.push_back(*(*homs)[a][a].coordinates(identity_chain_map(objs[a].complex())));
  auto cx = std::make_shared<std::vector<ProjComplex>>();
  for (const auto& o : objs) cx->push_back(o.complex());
  t.compose = [homs, cx](int a, int b, int c, int i, int j) {
    const ChainMap gf = compose((*homs)[b][c].basis()[j], (*homs)[a][b].basis()[i], (*cx)[a], (*cx)[b], (*cx)[c]);
    return *(*homs)[a][c].coordinates(gf);
  };
  return t;
}

AssociativeAlgebra derived_endomorphism_algebra(const std::vector<DerivedObject>& objs) {
  return algebra_from_homs(derived_hom_table(objs));
}

SiltingReduction silting_reduce(const DerivedObject& t, const std::vector<int>& d_positions) {
  const AlgebraPtr& h = t.algebra_ptr();
  const auto cert = is_silting(t);
  if (!cert.silting) throw InvalidInput("silting_reduce needs a silting object: " + cert.failure);
  std::vector<bool> in_d(t.size(), false);
  for (int i : d_positions) {
    if (i < 0 || i >= t.size()) throw InvalidInput("silting_reduce: no such summand");
    in_d[i] = true;
  }
  std::vector<DSummand> ds, ns;
  for (int i = 0; i < t.size(); ++i) (in_d[i] ? ds : ns).push_back(t.summands()[i]);
  const DerivedObject d = DerivedObject::from_summands(h, ds);
  const DerivedObject d_ord = d.reordered(canonical_ordering(d));

  SiltingReduction out;
  std::vector<DerivedObject> all;
  for (int i = 0; i < t.size(); ++i) all.push_back(t.summand(i));
  out.end_t_mod_ed = quotient_by_vertices(derived_endomorphism_algebra(all), d_positions);

  const int span = t.max_shift() - t.min_shift();
  const int cap = 2 * std::max(1, d.size()) * (span + 2);
  std::vector<DSummand> reduced;
  for (const auto& nsum : ns) {
    DerivedObject r = DerivedObject::from_summands(h, {nsum});
    int steps = 0;
    while (!d.is_zero() && !hom_orthogonal(d, r)) {
      for (int j = d_ord.size() - 1; j >= 0; --j) {
        if (++steps > cap) throw ApproximationDiverged("silting_reduce: no orthogonality after " + std::to_string(cap) + " steps");
        const DSummand& dj = d_ord.summands()[j];
        std::set<int> ms;
        for (const auto& b : r.summands()) {
          ms.insert(b.shift - dj.shift);
          ms.insert(b.shift - dj.shift - 1);
        }
        std::vector<DerivedObject> cands;
        for (int m : ms) cands.push_back(DerivedObject::from_summands(h, {{dj.module, dj.shift + m}}));
        Approximation a = approximate(r, cands, false);
        if (a.picked.empty()) continue;
        r = cone(DerivedMorphism{a.other, r, a.map}).cone;
      }
      ++out.iterations;
    }
    reduced.insert(reduced.end(), r.summands().begin(), r.summands().end());
  }
  out.s_n = DerivedObject::from_summands(h, reduced);
  std::vector<DerivedObject> parts;
  for (int i = 0; i < out.s_n.size(); ++i) parts.push_back(out.s_n.summand(i));
  out.end_s_n = derived_endomorphism_algebra(parts);
  return out;
}

bool is_two_term(const DerivedObject& t) {
  // Hom(A[s], M[i]) is nonzero only for i = s (M = A) and i = s + 1 (Ext^1(A, -) != 0 unless A is projective)
  for (const auto& s : t.summands()) {
    if (s.shift == 0) continue;
    if (s.shift == 1 && is_projective(s.module)) continue;
    return false;
  }
  return true;
}

PerpendicularModel perpendicular_model(const DerivedObject& d, const IndecCatalog& cat) {
  PerpendicularModel out;
  out.objects = perpendicular_category(d, cat);
  for (const auto& p : out.objects) {
    bool proj = true;
    for (const auto& y : out.objects) proj = proj && ext1_dim(p, y) == 0;
    if (proj) out.ext_projectives.push_back(p);
  }
  if (out.ext_projectives.empty()) return out;
  out.end = endomorphism_algebra_with_maps(out.ext_projectives);
  out.presentation = gabriel_presentation(out.end.algebra);
  return out;
}

Module perpendicular_functor(const PerpendicularModel& m, const Module& x) {
  const auto& b = *m.presentation.algebra;
  const int n = b.vertex_count();
  std::vector<std::vector<ModuleMorphism>> bases(n);
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) {
    bases[v] = hom_basis(m.ext_projectives[v], x);
    dims[v] = static_cast<int>(bases[v].size());
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < b.quiver().arrow_count(); ++a) {
    const auto& ar = b.quiver().arrow(a);
    const Vec& y = m.presentation.arrow_images[a];
    // y : P_t -> P_s; phi in Hom(P_s, X) goes to phi o y
    ModuleMorphism ym = ModuleMorphism::zero(m.ext_projectives[ar.target], m.ext_projectives[ar.source]);
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!y[i].is_zero()) ym = ym + y[i] * m.end.maps[i];
    Matrix mat(dims[ar.target], dims[ar.source]);
    for (int c = 0; c < dims[ar.source]; ++c) {
      const auto coords = hom_coordinates(bases[ar.target], compose(bases[ar.source][c], ym));
      for (int r = 0; r < dims[ar.target]; ++r) mat(r, c) = (*coords)[r];
    }
    maps.push_back(std::move(mat));
  }
  return Module(m.presentation.algebra, dims, maps);
}

}  // namespace silt

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "silt/derived.hpp"
#include "silt/errors.hpp"
#include "silt/homological.hpp"
#include "silt/tau.hpp"
#include "test_support.hpp"

using namespace silt;
using namespace silt::testing;

namespace {

DerivedObject obj(const AlgebraPtr& h, std::vector<DSummand> s) { return DerivedObject::from_summands(h, std::move(s)); }

DerivedObject regular(const AlgebraPtr& h) {
  std::vector<DSummand> s;
  for (int v = 0; v < h->vertex_count(); ++v) s.push_back({projective(h, v), 0});
  return obj(h, s);
}

std::string key(const DerivedObject& x) {
  std::multiset<std::string> parts;
  for (const auto& s : x.summands()) parts.insert(summand_label(s));
  std::string out;
  for (const auto& p : parts) out += p + ";";
  return out;
}

// Hom(A[s], B[t]) straight from chain maps modulo homotopy.
int homk_dim(const DerivedObject& x, const DerivedObject& y) { return HomK(x.complex(), y.complex()).dim(); }

// Silting objects reached from H by up to `depth` left or right mutations.
std::vector<DerivedObject> mutation_ball(const AlgebraPtr& h, int depth) {
  std::map<std::string, DerivedObject> seen;
  std::vector<DerivedObject> frontier{regular(h)};
  seen.emplace(key(frontier[0]), frontier[0]);
  for (int d = 0; d < depth; ++d) {
    std::vector<DerivedObject> next;
    for (const auto& t : frontier)
      for (int i = 0; i < t.size(); ++i)
        for (bool left : {true, false}) {
          const auto mu = left ? left_mutation(t, i) : right_mutation(t, i);
          if (seen.emplace(key(mu.result), mu.result).second) next.push_back(mu.result);
        }
    frontier = std::move(next);
  }
  std::vector<DerivedObject> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

// Independent presilting oracle: Hom(T, T[m]) by chain maps for m = 1 .. span + 1.
bool presilting_by_chain_maps(const DerivedObject& t) {
  const int span = t.is_zero() ? 0 : t.max_shift() - t.min_shift();
  for (int m = 1; m <= span + 1; ++m)
    if (homk_dim(t, t.shifted(m)) != 0) return false;
  return true;
}

}  // namespace

TEST(DerivedHom, ChainMapsMatchModuleFormula) {
  for (const auto& h : {linear_An(2), linear_An(3), linear_An(4)}) {
    const auto cat = enumerate_indecomposables(h);
    for (const auto& a : cat.modules)
      for (const auto& b : cat.modules)
        for (int s = -1; s <= 1; ++s)
          for (int t = -1; t <= 2; ++t) {
            const auto x = obj(h, {{a, s}}), y = obj(h, {{b, t}});
            const int formula = dhom_dim(x, y);
            ASSERT_EQ(homk_dim(x, y), formula) << summand_label({a, s}) << " -> " << summand_label({b, t});
            if (t - s != 0 && t - s != 1) EXPECT_EQ(formula, 0);
          }
  }
}

TEST(DerivedHom, ExtAsShiftedHom) {
  const auto h = linear_An(2);
  const auto x = obj(h, {{simple(h, 1), 0}});
  const auto y = obj(h, {{simple(h, 0), 1}});
  EXPECT_EQ(homk_dim(x, y), 1);
  EXPECT_EQ(static_cast<int>(dhom_basis(x, y).size()), 1);
  // the same number from a resolution, by hand: 0 -> P1 -> P2 -> S2 and Hom(P1, S1) = k, Hom(P2, S1) = 0
  EXPECT_EQ(hom_dim(projective(h, 0), simple(h, 0)) - hom_dim(projective(h, 1), simple(h, 0)), 1);
}

TEST(DerivedHom, IdentityAndComposition) {
  const auto h = linear_An(3);
  const auto x = obj(h, {{interval(h, 0, 1), 0}, {simple(h, 2), 1}});
  EXPECT_GE(homk_dim(x, x), 1);
  const auto basis = dhom_basis(x, x);
  for (const auto& f : basis)
    for (const auto& g : basis) {
      const auto gf = compose(g, f);
      EXPECT_TRUE(is_chain_map(gf.map, x.complex(), x.complex()));
    }
}

TEST(DerivedCone, Examples) {
  const auto h = linear_An(2);
  const auto p1 = obj(h, {{projective(h, 0), 0}});
  const auto p2 = obj(h, {{projective(h, 1), 0}});
  const auto b = dhom_basis(p1, p2);
  ASSERT_EQ(b.size(), 1u);
  const auto c = cone(b[0]).cone;
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.summands()[0].shift, 0);
  EXPECT_TRUE(is_isomorphic(c.summands()[0].module, simple(h, 1)));

  // identity has zero cone
  const auto x = obj(h, {{simple(h, 1), 0}, {projective(h, 0), 2}});
  ChainMap idm;
  idm.lo = x.complex().lo;
  for (int k = x.complex().lo; k <= x.complex().hi(); ++k) idm.f.push_back(identity_map(h, x.complex().term(k)));
  EXPECT_TRUE(cone({x, x, idm}).cone.is_zero());

  // 0 -> X
  const auto zero = DerivedObject::zero(h);
  const auto c0 = cone({zero, x, zero_chain_map(zero.complex(), x.complex())}).cone;
  EXPECT_EQ(key(c0), key(x));
  // X -> 0 gives X[1]
  const auto c1 = cone({x, zero, zero_chain_map(x.complex(), zero.complex())}).cone;
  EXPECT_EQ(key(c1), key(x.shifted(1)));
}

TEST(DerivedCone, NonSplitExtensionClass) {
  // S2 -> S1[1] is the class of 0 -> S1 -> P2 -> S2 -> 0; its cone is P2[1]
  const auto h = linear_An(2);
  const auto x = obj(h, {{simple(h, 1), 0}});
  const auto y = obj(h, {{simple(h, 0), 1}});
  const auto b = dhom_basis(x, y);
  ASSERT_EQ(b.size(), 1u);
  const auto c = cone(b[0]).cone;
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.summands()[0].shift, 1);
  EXPECT_TRUE(is_isomorphic(c.summands()[0].module, projective(h, 1)));
}

TEST(DerivedOrder, Examples) {
  const auto h = linear_An(2);
  const auto t = obj(h, {{projective(h, 1), 0}, {projective(h, 0), 0}});
  EXPECT_EQ(canonical_ordering(t), (std::vector<int>{1, 0}));
  const auto m = obj(h, {{simple(h, 1), 1}, {projective(h, 0), 0}});
  EXPECT_EQ(canonical_ordering(m), (std::vector<int>{1, 0}));
  const auto one = obj(h, {{simple(h, 0), 3}});
  EXPECT_EQ(canonical_ordering(one), (std::vector<int>{0}));
}

TEST(DerivedOrder, NoBackwardHomOnPresilting) {
  for (int n : {3, 4}) {
    const auto h = linear_An(n);
    for (const auto& t : mutation_ball(h, 3)) {
      const auto o = t.reordered(canonical_ordering(t));
      for (int i = 0; i < o.size(); ++i)
        for (int j = i + 1; j < o.size(); ++j) EXPECT_EQ(dhom_dim(o.summand(j), o.summand(i)), 0) << object_label(o);
    }
  }
}

TEST(DerivedSilting, Examples) {
  const auto h = linear_An(2);
  EXPECT_TRUE(is_silting(regular(h)).silting);
  const auto t = obj(h, {{simple(h, 1), 0}, {projective(h, 1), 0}});
  EXPECT_TRUE(is_silting(t).silting);
  // End(P1) sits in Hom(P1[1], P1[1]) = Hom(T, T[1]) for T = P1 + P1[1]
  const auto bad = obj(h, {{projective(h, 0), 0}, {projective(h, 0), 1}});
  const auto c = is_silting(bad);
  EXPECT_FALSE(c.presilting);
  EXPECT_FALSE(c.silting);
  EXPECT_FALSE(c.failure.empty());
  // duplicated class: presilting, flagged non-basic, still rank 2 after dedup
  const auto dup = obj(h, {{projective(h, 0), 0}, {projective(h, 0), 0}, {projective(h, 1), 0}});
  const auto cd = is_silting(dup);
  EXPECT_TRUE(cd.presilting);
  EXPECT_FALSE(cd.basic);
  EXPECT_TRUE(cd.silting);
  // almost complete
  EXPECT_FALSE(is_silting(obj(h, {{projective(h, 0), 0}})).silting);
}

TEST(DerivedSilting, CertificateAgreesWithChainMaps) {
  std::mt19937_64 rng(7);
  for (int n : {2, 3}) {
    const auto h = linear_An(n);
    const auto cat = enumerate_indecomposables(h);
    std::uniform_int_distribution<int> pick(0, cat.size() - 1), sh(-1, 2), len(1, n);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<DSummand> s;
      const int m = len(rng);
      for (int i = 0; i < m; ++i) s.push_back({cat.modules[pick(rng)], sh(rng)});
      const auto t = obj(h, s);
      EXPECT_EQ(is_presilting(t).presilting, presilting_by_chain_maps(t)) << object_label(t);
    }
  }
}

TEST(DerivedMutation, Examples) {
  const auto h = linear_An(2);
  const auto t = regular(h);  // P1, P2
  const auto mu1 = left_mutation(t, 0);
  EXPECT_EQ(key(mu1.result), key(obj(h, {{simple(h, 1), 0}, {projective(h, 1), 0}})));
  EXPECT_EQ(key(mu1.approximation), key(obj(h, {{projective(h, 1), 0}})));
  const auto mu2 = left_mutation(t, 1);
  EXPECT_TRUE(mu2.approximation.is_zero());
  EXPECT_EQ(key(mu2.result), key(obj(h, {{projective(h, 0), 0}, {projective(h, 1), 1}})));
}

TEST(DerivedMutation, OneClassChangesAndRightUndoesLeft) {
  for (int n : {2, 3}) {
    const auto h = linear_An(n);
    const auto ball = mutation_ball(h, n == 2 ? 4 : 3);
    EXPECT_GT(ball.size(), 3u);
    for (const auto& t : ball) {
      ASSERT_TRUE(is_silting(t).silting);
      EXPECT_EQ(t.size(), n);
      for (int i = 0; i < t.size(); ++i) {
        const auto l = left_mutation(t, i);
        EXPECT_FALSE(same_class(l.result.summands()[i], t.summands()[i]));
        for (int j = 0; j < t.size(); ++j)
          if (j != i) EXPECT_TRUE(same_class(l.result.summands()[j], t.summands()[j]));
        const auto back = right_mutation(l.result, i);
        EXPECT_TRUE(same_class(back.result.summands()[i], t.summands()[i])) << object_label(t) << " at " << i;
        const auto fwd = left_mutation(right_mutation(t, i).result, i);
        EXPECT_TRUE(same_class(fwd.result.summands()[i], t.summands()[i]));
      }
    }
  }
}

TEST(DerivedPerp, Examples) {
  {
    const auto h = linear_An(2);
    const auto cat = enumerate_indecomposables(h);
    EXPECT_EQ(perpendicular_category(DerivedObject::zero(h), cat).size(), 3u);
    const auto p = perpendicular_category(obj(h, {{projective(h, 1), 0}}), cat);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_TRUE(is_isomorphic(p[0], simple(h, 0)));
  }
  {
    const auto h = linear_An(3);
    const auto cat = enumerate_indecomposables(h);
    const auto p = perpendicular_category(obj(h, {{projective(h, 0), 0}}), cat);
    std::set<std::string> labels;
    for (const auto& m : p) labels.insert(module_label(m));
    EXPECT_EQ(labels, (std::set<std::string>{"2", "3", "32"}));
  }
}

TEST(DerivedPerp, ShiftDoesNotMatter) {
  const auto h = linear_An(4);
  const auto cat = enumerate_indecomposables(h);
  for (const auto& m : cat.modules) {
    const auto a = perpendicular_category(obj(h, {{m, 0}}), cat);
    const auto b = perpendicular_category(obj(h, {{m, 3}}), cat);
    EXPECT_EQ(a.size(), b.size());
  }
}

TEST(DerivedPerp, EquivalentToModulesOverEndOfExtProjectives) {
  for (int n : {3, 4}) {
    const auto h = linear_An(n);
    const auto cat = enumerate_indecomposables(h);
    for (const auto& t : mutation_ball(h, 2))
      for (int i = 0; i < t.size(); ++i) {
        const auto d = t.summand(i);
        const auto model = perpendicular_model(d, cat);
        // the perpendicular category of an exceptional object has rank n - 1
        EXPECT_EQ(static_cast<int>(model.ext_projectives.size()), n - 1);
        std::vector<Module> images;
        for (const auto& x : model.objects) images.push_back(perpendicular_functor(model, x));
        for (std::size_t a = 0; a < images.size(); ++a) {
          EXPECT_TRUE(is_indecomposable(images[a]));
          for (std::size_t b = 0; b < images.size(); ++b) {
            EXPECT_EQ(hom_dim(images[a], images[b]), hom_dim(model.objects[a], model.objects[b]));
            EXPECT_EQ(ext1_dim(images[a], images[b]), ext1_dim(model.objects[a], model.objects[b]));
          }
        }
        // and every indecomposable over the presented algebra is hit
        const auto target = enumerate_indecomposables(model.presentation.algebra);
        EXPECT_EQ(target.size(), static_cast<int>(images.size()));
      }
  }
}

TEST(DerivedCompletion, AlreadySilting) {
  const auto h = linear_An(3);
  const auto cat = enumerate_indecomposables(h);
  const auto r = perp_completion(regular(h), cat);
  EXPECT_TRUE(r.complement.is_zero());
}

TEST(DerivedCompletion, SimpleOverA2MatchesBruteForce) {
  const auto h = linear_An(2);
  const auto cat = enumerate_indecomposables(h);
  const auto n = obj(h, {{simple(h, 1), 0}});
  const auto r = perp_completion(n, cat);
  ASSERT_EQ(r.complement.size(), 1);
  std::set<std::string> valid;
  for (const auto& m : cat.modules)
    for (int s = -3; s <= 3; ++s) {
      const auto x = obj(h, {{m, s}});
      if (is_silting(direct_sum(n, x)).silting && hom_orthogonal(x, n)) valid.insert(key(x));
    }
  // only S1 is orthogonal to S2, and it works at every positive shift
  EXPECT_EQ(valid, (std::set<std::string>{"1[1];", "1[2];", "1[3];"}));
  EXPECT_TRUE(valid.count(key(r.complement)));
}

TEST(DerivedCompletion, CertifiedWithIncreasingCounter) {
  std::mt19937_64 rng(11);
  for (int n : {3, 4}) {
    const auto h = linear_An(n);
    const auto cat = enumerate_indecomposables(h);
    const auto ball = mutation_ball(h, 2);
    for (int trial = 0; trial < 12; ++trial) {
      const auto& t = ball[rng() % ball.size()];
      std::vector<DSummand> keep;
      for (const auto& s : t.summands())
        if (rng() % 2) keep.push_back(s);
      const auto nn = obj(h, keep);
      const auto r = perp_completion(nn, cat);
      EXPECT_EQ(r.complement.size() + nn.size(), n);
      EXPECT_TRUE(is_silting(direct_sum(nn, r.complement)).silting);
      EXPECT_TRUE(hom_orthogonal(r.complement, nn));
      for (const auto& tr : r.p_trace)
        for (std::size_t i = 1; i < tr.size(); ++i) EXPECT_GT(tr[i], tr[i - 1]);
    }
    const auto p = obj(h, {{projective(h, n - 1), 0}});
    const auto r = perp_completion(p, cat);
    for (const auto& m : cat.modules)
      for (int s = -2; s <= 2; ++s)
        for (const auto& x : r.complement.summands()) {
          // brute force: no Hom from the complement into any shift of N
          EXPECT_EQ(dhom_dim(obj(h, {x}), p.shifted(s)), 0);
          (void)m;
        }
  }
}

TEST(DerivedReduction, ZeroAndA2) {
  const auto h = linear_An(2);
  const auto t = regular(h);
  const auto r0 = silting_reduce(t, {});
  EXPECT_EQ(r0.end_t_mod_ed.dim(), 3);
  EXPECT_EQ(r0.end_s_n.dim(), 3);
  const auto r = silting_reduce(t, {0});
  EXPECT_EQ(r.end_t_mod_ed.dim(), 1);
  EXPECT_EQ(r.end_s_n.dim(), 1);
  EXPECT_TRUE(hom_orthogonal(obj(h, {{projective(h, 0), 0}}), r.s_n));
}

TEST(DerivedReduction, QuotientMatchesEndOfReducedObject) {
  std::mt19937_64 rng(5);
  for (int n : {3, 4}) {
    const auto h = linear_An(n);
    const auto ball = mutation_ball(h, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& t = ball[rng() % ball.size()];
      std::vector<int> d;
      for (int i = 0; i < t.size(); ++i)
        if (rng() % 3 == 0) d.push_back(i);
      const auto r = silting_reduce(t, d);
      std::vector<DSummand> ds;
      for (int i : d) ds.push_back(t.summands()[i]);
      EXPECT_TRUE(hom_orthogonal(obj(h, ds), r.s_n));
      EXPECT_EQ(r.s_n.size(), n - static_cast<int>(d.size()));
      ASSERT_EQ(r.end_t_mod_ed.dim(), r.end_s_n.dim()) << object_label(t);
      if (r.end_s_n.dim() == 0) continue;
      const auto p = gabriel_presentation(r.end_t_mod_ed);
      const auto q = gabriel_presentation(r.end_s_n);
      EXPECT_TRUE(presentations_isomorphic(*p.algebra, *q.algebra)) << object_label(t);
    }
  }
}

TEST(DerivedReduction, MatchesTauTiltingReduction) {
  for (int n : {3, 4}) {
    const auto h = linear_An(n);
    const auto cat = enumerate_indecomposables(h);
    for (const auto& z : cat.modules) {
      const auto red = tau_tilting_reduction(cat, {z});
      std::vector<DSummand> us;
      for (const auto& u : red.u) us.push_back({u, 0});
      const auto t = obj(h, us);
      ASSERT_TRUE(is_two_term(t));
      const auto r = silting_reduce(t, red.completion.z_positions);
      ASSERT_EQ(r.end_s_n.dim(), red.c.dim());
      const auto q = gabriel_presentation(r.end_s_n);
      EXPECT_TRUE(presentations_isomorphic(*red.presentation.algebra, *q.algebra)) << module_label(z);
    }
  }
}

TEST(DerivedTwoTerm, DirectCheckAgrees) {
  const auto h = linear_An(2);
  const auto cat = enumerate_indecomposables(h);
  auto exhaustive = [&](const DerivedObject& t) {
    for (const auto& m : cat.modules)
      for (int i = -2; i <= 3; ++i) {
        if (i == 0 || i == 1) continue;
        if (dhom_dim(t, obj(h, {{m, i}})) != 0) return false;
      }
    return true;
  };
  const auto mod = obj(h, {{simple(h, 1), 0}, {projective(h, 1), 0}});
  EXPECT_TRUE(is_two_term(mod));
  EXPECT_TRUE(exhaustive(mod));
  const auto s12 = obj(h, {{simple(h, 0), 2}});
  EXPECT_FALSE(is_two_term(s12));
  EXPECT_FALSE(exhaustive(s12));
  // S2[1] maps to S1[2] through Ext^1(S2, S1)
  const auto mixed = obj(h, {{projective(h, 0), 0}, {simple(h, 1), 1}});
  EXPECT_FALSE(exhaustive(mixed));
  EXPECT_EQ(is_two_term(mixed), exhaustive(mixed));
  const auto proj1 = obj(h, {{projective(h, 0), 1}, {simple(h, 0), 0}});
  EXPECT_EQ(is_two_term(proj1), exhaustive(proj1));
  for (const auto& m : cat.modules)
    for (int s = -2; s <= 3; ++s) {
      const auto x = obj(h, {{m, s}});
      EXPECT_EQ(is_two_term(x), exhaustive(x)) << summand_label({m, s});
    }
}

TEST(DerivedCompletion, ZeroApproximationIsAShift) {
  // no map from S3[-3] into S1[-2] + P2 at all, so the mutation only shifts
  const auto h = linear_An(3);
  const auto cat = enumerate_indecomposables(h);
  const auto n = obj(h, {{simple(h, 0), -2}, {projective(h, 1), 0}});
  const auto t = direct_sum(n, obj(h, {{simple(h, 2), -3}}));
  ASSERT_TRUE(is_silting(t).silting);
  const auto mu = left_mutation(t, 2);
  EXPECT_TRUE(mu.approximation.is_zero());
  EXPECT_EQ(key(mu.exchanged), "3[-2];");
  const auto r = perp_completion(n, cat);
  EXPECT_TRUE(is_silting(direct_sum(n, r.complement)).silting);
  EXPECT_TRUE(hom_orthogonal(r.complement, n));
}

#include <gtest/gtest.h>

#include <queue>
#include <set>

#include "silt/errors.hpp"

#include "silt/homological.hpp"
#include "silt/tau.hpp"
#include "test_support.hpp"

using namespace silt;
using namespace silt::testing;

namespace {

std::vector<Module> modules_at(const IndecCatalog& cat, const std::vector<int>& idx) {
  std::vector<Module> out;
  for (int i : idx) out.push_back(cat.modules[i]);
  return out;
}

std::set<int> indices_of(const IndecCatalog& cat, const std::vector<Module>& ms) {
  std::set<int> out;
  for (const auto& m : ms) out.insert(cat.find(m));
  return out;
}

// Support tau-tilting pairs reached by mutation from (A, 0).
int mutation_walk_count(const IndecCatalog& cat) {
  const int n = cat.algebra->vertex_count();
  const int m = cat.size();
  std::vector<std::vector<char>> rigid(m, std::vector<char>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Module t = tau(cat.modules[j]);
      rigid[i][j] = t.is_zero() || hom_dim(cat.modules[i], t) == 0;
    }
  using State = std::pair<std::set<int>, std::set<int>>;  // (modules, projective vertices)
  auto valid = [&](const State& s) {
    for (int x : s.first)
      for (int y : s.first)
        if (!rigid[x][y]) return false;
    for (int v : s.second)
      for (int x : s.first)
        if (cat.modules[x].dim(v) != 0) return false;
    return static_cast<int>(s.first.size() + s.second.size()) == n;
  };
  State start;
  for (int p : cat.projectives) start.first.insert(p);
  std::set<State> seen{start};
  std::queue<State> todo;
  todo.push(start);
  while (!todo.empty()) {
    const State s = todo.front();
    todo.pop();
    std::vector<State> almost;
    for (int x : s.first) {
      State t = s;
      t.first.erase(x);
      almost.push_back(t);
    }
    for (int v : s.second) {
      State t = s;
      t.second.erase(v);
      almost.push_back(t);
    }
    for (const auto& a : almost) {
      std::vector<State> completions;
      for (int y = 0; y < m; ++y) {
        if (a.first.count(y)) continue;
        State t = a;
        t.first.insert(y);
        if (valid(t)) completions.push_back(t);
      }
      for (int v = 0; v < n; ++v) {
        if (a.second.count(v)) continue;
        State t = a;
        t.second.insert(v);
        if (valid(t)) completions.push_back(t);
      }
      EXPECT_EQ(completions.size(), 2u);  // exactly two completions
      for (const auto& c : completions)
        if (seen.insert(c).second) todo.push(c);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST(TauRigid, Examples) {
  const auto a = generate_Ank(4, 3);
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(is_tau_rigid(projective(a, v)));
  EXPECT_TRUE(is_tau_rigid(injective(a, 3)));
  const auto b = linear_An(2);
  EXPECT_FALSE(is_tau_rigid(std::vector<Module>{simple(b, 0), simple(b, 1)}));
  EXPECT_FALSE(is_tau_rigid(direct_sum(simple(b, 0), simple(b, 1))));
  EXPECT_TRUE(is_tau_rigid(Module::zero(b)));
}

TEST(Bongartz, ProjectivesAreComplete) {
  const auto a = generate_Ank(5, 3);
  const auto cat = enumerate_indecomposables(a);
  std::vector<Module> ps;
  for (int v = 0; v < 5; ++v) ps.push_back(projective(a, v));
  const auto u = bongartz_completion(cat, ps);
  EXPECT_EQ(std::set<int>(u.summands.begin(), u.summands.end()), indices_of(cat, ps));
}

TEST(Bongartz, A43AtI4) {
  const auto a = generate_Ank(4, 3);
  const auto cat = enumerate_indecomposables(a);
  const auto u = bongartz_completion(cat, {injective(a, 3)});
  EXPECT_EQ(std::set<int>(u.summands.begin(), u.summands.end()),
            indices_of(cat, {projective(a, 0), projective(a, 1), projective(a, 3), injective(a, 3)}));
}

TEST(Bongartz, A54AtI5) {
  const auto a = generate_Ank(5, 4);
  const auto cat = enumerate_indecomposables(a);
  const auto u = bongartz_completion(cat, {injective(a, 4)});
  EXPECT_EQ(std::set<int>(u.summands.begin(), u.summands.end()),
            indices_of(cat, {projective(a, 0), projective(a, 1), projective(a, 2), projective(a, 4), injective(a, 4)}));
}

TEST(Bongartz, AlwaysTauTiltingContainingZ) {
  for (int k = 2; k <= 5; ++k) {
    const auto a = generate_Ank(5, k);
    const auto cat = enumerate_indecomposables(a);
    for (int z = 0; z < cat.size(); ++z) {
      if (!is_tau_rigid(cat.modules[z])) continue;
      const auto u = bongartz_completion(cat, {cat.modules[z]});
      EXPECT_EQ(static_cast<int>(u.summands.size()), 5);
      EXPECT_TRUE(is_tau_rigid(modules_at(cat, u.summands)));
      EXPECT_EQ(u.summands[u.z_positions[0]], z);
    }
  }
}

TEST(Reduction, Trivial) {
  const auto a = generate_Ank(4, 3);
  const auto cat = enumerate_indecomposables(a);
  std::vector<Module> ps;
  for (int v = 0; v < 4; ++v) ps.push_back(projective(a, v));
  EXPECT_EQ(tau_tilting_reduction(cat, ps).presentation.algebra->dim(), 0);
  const auto r0 = tau_tilting_reduction(cat, {});
  EXPECT_TRUE(presentations_isomorphic(*r0.presentation.algebra, *a));
}

TEST(Reduction, A43AtI4) {
  const auto a = generate_Ank(4, 3);
  const auto cat = enumerate_indecomposables(a);
  const auto r = tau_tilting_reduction(cat, {injective(a, 3)});
  EXPECT_TRUE(presentations_isomorphic(*gabriel_presentation(r.b).algebra, *generate_Ank(4, 4)));
  EXPECT_EQ(r.presentation.algebra->vertex_count(), 3);
}

TEST(Reduction, EndomorphismNeedNotBeShod) {
  const auto a = generate_Ank(5, 4);
  const auto cat = enumerate_indecomposables(a);
  const auto r = tau_tilting_reduction(cat, {injective(a, 4)});
  const auto b = gabriel_presentation(r.b).algebra;
  PresentationIso w;
  ASSERT_TRUE(presentations_isomorphic(*generate_Ank(5, 5), *b, &w));
  const int s3 = w.vertex_map[2];
  EXPECT_EQ(projective_dimension(simple(b, s3)), 2);
  EXPECT_EQ(injective_dimension(simple(b, s3)), 2);
  EXPECT_FALSE(classify(b).is_shod);
  EXPECT_TRUE(classify(r.presentation.algebra).is_shod);
}

TEST(Reduction, ShodIsClosed) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= std::min(n, 4); ++k) {
      const auto a = generate_Ank(n, k);
      const auto cat = enumerate_indecomposables(a);
      ASSERT_TRUE(classify(cat).is_shod);
      for (int z = 0; z < cat.size(); ++z) {
        if (!is_tau_rigid(cat.modules[z])) continue;
        const auto r = tau_tilting_reduction(cat, {cat.modules[z]});
        EXPECT_EQ(r.presentation.algebra->vertex_count(), n - 1);
        EXPECT_TRUE(classify(r.presentation.algebra).is_shod) << n << k << " Z=" << module_label(cat.modules[z]);
      }
    }
}

TEST(Support, SmallCounts) {
  EXPECT_EQ(enumerate_support_tau_tilting(enumerate_indecomposables(linear_An(1))).size(), 2u);
  EXPECT_EQ(enumerate_support_tau_tilting(enumerate_indecomposables(linear_An(2))).size(), 5u);
}

TEST(Support, AgreesWithMutationWalk) {
  for (const auto& a : {generate_Ank(3, 3), linear_An(3), generate_Ank(4, 3), generate_Ank(4, 4)}) {
    const auto cat = enumerate_indecomposables(a);
    EXPECT_EQ(static_cast<int>(enumerate_support_tau_tilting(cat).size()), mutation_walk_count(cat));
  }
}

TEST(Support, CatalanForHereditaryAn) {
  // Catalan numbers count support tau-tilting modules of linearly oriented A_n
  const int catalan[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_support_tau_tilting(enumerate_indecomposables(linear_An(n))).size()),
              catalan[n]);
}

TEST(Support, CapIsEnforced) {
  const auto cat = enumerate_indecomposables(linear_An(3));
  EXPECT_THROW(enumerate_support_tau_tilting(cat, 2), BudgetExceeded);
}

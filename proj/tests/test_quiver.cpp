#include <gtest/gtest.h>

#include <random>

#include "silt/assoc_algebra.hpp"
#include "silt/errors.hpp"

using namespace silt;

namespace {

// Independent count for linear monomial algebras: a path i -> ... -> j
// (1-based, i >= j) survives iff no killed a<t+1>.a<t> lies inside [j, i].
int linear_path_count(int n, const std::vector<int>& killed) {
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      bool ok = true;
      for (int t : killed)
        if (t >= j && t + 2 <= i) ok = false;
      count += ok;
    }
  return count;
}

std::vector<std::vector<int>> cartan(const BoundQuiverAlgebra& a) {
  std::vector<std::vector<int>> c(a.vertex_count(), std::vector<int>(a.vertex_count()));
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = 0; v < a.vertex_count(); ++v) c[u][v] = a.cartan(u, v);
  return c;
}

}  // namespace

TEST(BuildAlgebra, LinearA2) {
  const auto a = linear_An(2);
  EXPECT_EQ(a->dim(), 3);
  EXPECT_TRUE(a->basis_path(0).is_trivial());
  EXPECT_TRUE(a->basis_path(1).is_trivial());
  EXPECT_EQ(path_string(a->quiver(), a->basis_path(2)), "a1");
}

TEST(BuildAlgebra, A43AndA44AgainstPathOracle) {
  // A(4,3) has 4 trivial paths, 3 arrows and the single surviving 4->3->2.
  EXPECT_EQ(generate_Ank(4, 3)->dim(), linear_path_count(4, {1}));
  EXPECT_EQ(generate_Ank(4, 3)->dim(), 8);
  EXPECT_EQ(generate_Ank(4, 4)->dim(), linear_path_count(4, {1, 2}));
  EXPECT_EQ(generate_Ank(4, 4)->dim(), 7);
}

TEST(BuildAlgebra, AnkFamilyMatchesOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k) {
      std::vector<int> killed;
      for (int i = 1; i <= k - 2; ++i) killed.push_back(i);
      const auto a = generate_Ank(n, k);
      EXPECT_EQ(a->dim(), linear_path_count(n, killed)) << n << "," << k;
      as_associative(*a).validate();
    }
  // A(n,n) is A_n modulo rad^2
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(generate_Ank(n, n)->dim(), 2 * n - 1);
}

TEST(BuildAlgebra, CommutativeSquare) {
  // 1 -> 2 -> 4, 1 -> 3 -> 4 with a.b - c.d
  Quiver q(4);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 3);
  q.add_arrow("c", 0, 2);
  q.add_arrow("d", 2, 3);
  Relation r{{{Fp(1), Path::from_arrows(q, {0, 1})}, {Fp(-1), Path::from_arrows(q, {2, 3})}}};
  const auto a = build_algebra(q, {r});
  EXPECT_EQ(a->dim(), 9);
  EXPECT_EQ(a->cartan(0, 3), 1);
  // both paths reduce to the same element
  EXPECT_EQ(a->normal_form(Path::from_arrows(q, {0, 1})), a->normal_form(Path::from_arrows(q, {2, 3})));
  as_associative(*a).validate();
}

TEST(BuildAlgebra, LoopWithRelation) {
  Quiver q(1);
  q.add_arrow("x", 0, 0);
  Relation r{{{Fp(1), Path::from_arrows(q, {0, 0, 0})}}};
  const auto a = build_algebra(q, {r});
  EXPECT_EQ(a->dim(), 3);
  as_associative(*a).validate();
}

TEST(BuildAlgebra, NotFiniteDimensional) {
  Quiver q(1);
  q.add_arrow("x", 0, 0);
  EXPECT_THROW(build_algebra(q, {}, 10), NotFiniteDimensional);
}

TEST(BuildAlgebra, RejectsShortRelation) {
  Quiver q(2);
  q.add_arrow("a", 1, 0);
  Relation r{{{Fp(1), Path::from_arrows(q, {0})}}};
  EXPECT_THROW(build_algebra(q, {r}), InvalidInput);
}

TEST(IdempotentQuotient, Examples) {
  const auto a = generate_Ank(4, 3);
  const auto q = idempotent_quotient(*a, {3});
  EXPECT_EQ(q->vertex_count(), 3);
  EXPECT_EQ(q->key(), generate_Ank(3, 3)->key());
  EXPECT_EQ(idempotent_quotient(*a, {})->key(), a->key());
  const auto k = idempotent_quotient(*linear_An(2), {1});
  EXPECT_EQ(k->dim(), 1);
  EXPECT_EQ(idempotent_quotient(*a, {0, 1, 2, 3})->dim(), 0);
}

TEST(IdempotentQuotient, IteratedCoherence) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    const int n = 5;
    std::vector<int> killed;
    for (int t = 1; t <= n - 2; ++t)
      if (rng() % 3 == 0) killed.push_back(t);
    const auto a = linear_monomial_algebra(n, killed);
    std::vector<int> s, s2, both;
    for (int v = 0; v < n; ++v) {
      const auto r = rng() % 3;
      if (r == 0) s.push_back(v);
      if (r == 1) s2.push_back(v);
    }
    both = s;
    both.insert(both.end(), s2.begin(), s2.end());
    // renumber s2 inside A/<e_s>
    std::vector<int> s2_new;
    for (int v : s2) s2_new.push_back(v - static_cast<int>(std::count_if(s.begin(), s.end(), [v](int x) { return x < v; })));
    const auto step = idempotent_quotient(*idempotent_quotient(*a, s), s2_new);
    const auto once = idempotent_quotient(*a, both);
    EXPECT_EQ(step->dim(), once->dim());
    EXPECT_EQ(cartan(*step), cartan(*once));
  }
}

TEST(Corner, Examples) {
  const auto a3 = linear_An(3);
  const auto c = corner_algebra(*a3, {0, 2});
  c.validate();
  EXPECT_EQ(c.dim(), 3);
  EXPECT_EQ(c.block_indices(1, 0).size(), 1u);  // the path 3->2->1
  const auto full = corner_algebra(*a3, {0, 1, 2});
  EXPECT_EQ(full.dim(), a3->dim());
  const auto kk = corner_algebra(*generate_Ank(3, 3), {0, 2});
  EXPECT_EQ(kk.dim(), 2);
}

TEST(Corner, CartanIsSubmatrix) {
  const auto a = generate_Ank(6, 3);
  const std::vector<int> keep{0, 2, 3, 5};
  const auto c = corner_algebra(*a, keep);
  c.validate();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(static_cast<int>(c.block_indices(i, j).size()), a->cartan(keep[i], keep[j]));
}

TEST(Opposite, InvolutionAndDimension) {
  const auto a2 = linear_An(2);
  const auto op = opposite_algebra(*a2);
  EXPECT_EQ(op->quiver().arrow(0).source, 0);
  EXPECT_EQ(op->quiver().arrow(0).target, 1);
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto a = generate_Ank(n, k);
      EXPECT_EQ(a->opposite()->dim(), a->dim());
      EXPECT_EQ(opposite_algebra(*a->opposite())->key(), a->key());
    }
  EXPECT_EQ(generate_Ank(4, 3)->opposite()->dim(), 8);
}

TEST(Opposite, CommutesWithQuotient) {
  const auto a = generate_Ank(5, 4);
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> cut;
    for (int v = 0; v < 5; ++v)
      if (mask >> v & 1) cut.push_back(v);
    EXPECT_EQ(opposite_algebra(*idempotent_quotient(*a, cut))->key(), idempotent_quotient(*a->opposite(), cut)->key());
  }
}

TEST(QuotientByVertices, MatchesIdempotentQuotient) {
  const auto a = generate_Ank(5, 3);
  const auto b = as_associative(*a);
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> cut;
    for (int v = 0; v < 5; ++v)
      if (mask >> v & 1) cut.push_back(v);
    const auto q = quotient_by_vertices(b, cut);
    q.validate();
    EXPECT_EQ(q.dim(), idempotent_quotient(*a, cut)->dim());
  }
}

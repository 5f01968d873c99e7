#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "silt/algebra.hpp"
#include "silt/assoc_algebra.hpp"
#include "silt/module.hpp"

namespace silt {

/// Hom spaces between the summands T_0..T_{m-1} of some object, in whatever
/// coordinates the caller uses. Used to build End(T) for modules and for
/// derived objects alike.
struct HomTable {
  int count = 0;
  std::vector<std::vector<int>> dims;  // dims[a][b] = dim Hom(T_a, T_b)
  std::vector<Vec> identity;           // id of T_a in Hom(T_a, T_a) coordinates
  // coordinates in Hom(T_a, T_c) of g_j o f_i, f_i in Hom(T_a, T_b), g_j in Hom(T_b, T_c)
  std::function<Vec(int a, int b, int c, int i, int j)> compose;
};

/// End(T) with one vertex per summand. A map T_a -> T_b lies in the block
/// from b to a, so that products read as composition: x * y = x o y.
/// Throws NonLocalSummand if some End(T_a) is not local with residue field k.
/// If `coords` is given it receives, per basis element, its coordinates in the
/// caller's Hom basis (the map itself goes T_a -> T_b for block b -> a).
AssociativeAlgebra algebra_from_homs(const HomTable& h, std::vector<Vec>* coords = nullptr);

AssociativeAlgebra endomorphism_algebra(const std::vector<Module>& summands);

/// Same algebra together with the morphism behind each basis element.
struct ModuleEndomorphisms {
  AssociativeAlgebra algebra;
  std::vector<ModuleMorphism> maps;
};
ModuleEndomorphisms endomorphism_algebra_with_maps(const std::vector<Module>& summands);

struct AlgebraPresentation {
  AlgebraPtr algebra;
  std::vector<Vec> arrow_images;  // per arrow, in coordinates of the source algebra
  std::vector<Vec> basis_images;  // per basis path of `algebra`
};

/// Quiver with relations of a split basic algebra with the given vertex
/// idempotents. Arrows are named x<s>_<t>_<i> (1-based). Throws NotSplitBasic.
AlgebraPresentation gabriel_presentation(const AssociativeAlgebra& b);

inline constexpr std::int64_t kDefaultIsoBudget = 1'000'000;

struct PresentationIso {
  std::vector<int> vertex_map;  // vertex of P -> vertex of Q
  std::vector<int> arrow_map;   // arrow of P -> arrow of Q
  std::vector<Fp> scale;        // arrow a of P goes to scale[a] * arrow_map[a]
};

/// Decides whether P and Q are isomorphic through a vertex bijection sending
/// arrows to scalar multiples of arrows. Scalars on a spanning forest are
/// gauged to 1; the remaining ones are tried in {1, -1}. Throws
/// SearchBudgetExceeded when the search exceeds `budget` steps.
bool presentations_isomorphic(const BoundQuiverAlgebra& p, const BoundQuiverAlgebra& q,
                              PresentationIso* witness = nullptr, std::int64_t budget = kDefaultIsoBudget);

}  // namespace silt

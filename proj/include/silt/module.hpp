#pragma once

#include <utility>
#include <vector>

#include "silt/algebra.hpp"
#include "silt/matrix.hpp"

namespace silt {

/// Right module over a bound quiver algebra, stored as a representation:
/// a vector space per vertex and, per arrow s -> t, a dims[t] x dims[s]
/// matrix. A path acts on the right, so a.b acts as map(b) * map(a).
class Module {
 public:
  Module() = default;
  /// Validates shapes and relations; throws InvalidInput.
  Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> maps);

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const BoundQuiverAlgebra& algebra() const noexcept { return *algebra_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(int v) const { return dims_.at(v); }
  int total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Matrix& map(int arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// Matrix of the action of a path: M_source -> M_target.
  Matrix path_action(const Path& p) const;
  /// Action of the i-th basis element of the algebra.
  Matrix basis_action(int i) const { return path_action(algebra_->basis_path(i)); }

  /// Offset of vertex v in the concatenated total space.
  int offset(int v) const;

  friend bool operator==(const Module& a, const Module& b);

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

struct ModuleMorphism {
  Module source;
  Module target;
  std::vector<Matrix> maps;  // per vertex, target dim x source dim

  static ModuleMorphism zero(const Module& m, const Module& n);
  static ModuleMorphism identity(const Module& m);

  bool is_zero() const noexcept;
  /// Checks the intertwining condition on every arrow.
  bool is_valid() const;
  bool is_iso() const;
  /// Entries of every vertex map, row-major, vertices in order.
  Vec flatten() const;
  /// Block-diagonal matrix on the total spaces.
  Matrix total_matrix() const;
};

/// g after f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism operator*(Fp s, const ModuleMorphism& f);
ModuleMorphism unflatten(const Module& m, const Module& n, const Vec& v);
int hom_space_dim(const Module& m, const Module& n);  // sum of dims_M(v) dims_N(v)

// Standard modules. Vertices are 0-based here.
Module projective(AlgebraPtr a, int v);
Module injective(AlgebraPtr a, int v);
Module simple(AlgebraPtr a, int v);
/// One-dimensional at each vertex in [lo, hi], arrows inside acting by 1.
Module interval(AlgebraPtr a, int lo, int hi);
/// One-dimensional on `support`, arrows inside acting by 1.
Module thin_module(AlgebraPtr a, const std::vector<int>& support);

/// Direct sum of P(v) for v in tops. At vertex w the basis is, summand by
/// summand, the basis paths from tops[i] to w.
Module projective_sum(AlgebraPtr a, const std::vector<int>& tops);
/// Direct sum of I(v); at w the basis is dual to the paths from w to tops[i].
Module injective_sum(AlgebraPtr a, const std::vector<int>& tops);

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& ms, AlgebraPtr a);
/// Inclusion of the i-th summand and projection onto it.
ModuleMorphism sum_inclusion(const std::vector<Module>& ms, const Module& sum, int i);
ModuleMorphism sum_projection(const std::vector<Module>& ms, const Module& sum, int i);

/// Morphism from projective_sum(tops) sending the i-th top to gens[i] in M_{tops[i]}.
ModuleMorphism from_projective_sum(const Module& p, const std::vector<int>& tops, const std::vector<Vec>& gens,
                                   const Module& m);

/// Submodule spanned per vertex by the columns of `spans` (need not be
/// independent, must be closed under the arrows); returns the inclusion.
ModuleMorphism submodule(const Module& m, const std::vector<Matrix>& spans);
/// Quotient by a submodule given by spanning columns; returns the projection.
ModuleMorphism quotient(const Module& m, const std::vector<Matrix>& spans);

ModuleMorphism kernel(const ModuleMorphism& f);    // inclusion ker f -> source
ModuleMorphism image(const ModuleMorphism& f);     // inclusion im f -> target
ModuleMorphism cokernel(const ModuleMorphism& f);  // projection target -> coker f

/// h with h * proj == g, for proj surjective and g vanishing on ker proj.
ModuleMorphism factor_through_epi(const ModuleMorphism& proj, const ModuleMorphism& g);
/// h with incl * h == g, for incl injective and im g inside im incl.
ModuleMorphism factor_through_mono(const ModuleMorphism& incl, const ModuleMorphism& g);

std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);
/// Coordinates of f in the given basis; nullopt if f is outside the span.
std::optional<Vec> hom_coordinates(const std::vector<ModuleMorphism>& basis, const ModuleMorphism& f);

/// Standard duality D = Hom_k(-, k): a module over A^op (A->opposite()).
Module dual(const Module& m);
/// Same as dual but landing on a caller-supplied algebra whose quiver is
/// the reverse of m's (used to come back to the original algebra object).
Module dual_over(const Module& m, AlgebraPtr target);
/// D(f): D(target) -> D(source).
ModuleMorphism dual(const ModuleMorphism& f);

/// View a module vanishing on `cut` as a module over A/<e_cut> (the
/// quotient must come from idempotent_quotient(A, cut)).
Module restrict_to_quotient(const Module& m, AlgebraPtr quotient, const std::vector<int>& cut);
/// Inverse direction: an A/<e_cut>-module regarded as an A-module.
Module inflate_from_quotient(const Module& m, AlgebraPtr full, const std::vector<int>& cut);

/// Randomised (deterministically seeded) isomorphism test.
bool is_isomorphic(const Module& m, const Module& n);

}  // namespace silt

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silt/assoc_algebra.hpp"
#include "silt/classify.hpp"
#include "silt/complex.hpp"
#include "silt/endo.hpp"

namespace silt {

/// One indecomposable summand X[shift] of an object of D^b(mod H), H hereditary.
struct DSummand {
  Module module;
  int shift = 0;
};

/// Object of D^b(mod H) in split form, together with its complex of
/// projectives (the direct sum of minimal resolutions placed at the shifts).
class DerivedObject {
 public:
  DerivedObject() = default;
  static DerivedObject zero(AlgebraPtr h);
  /// Decomposes every module entry, so the summand list may grow.
  static DerivedObject from_summands(AlgebraPtr h, const std::vector<DSummand>& summands);
  /// X = sum_i H^i(X)[-i]; needs H hereditary.
  static DerivedObject from_complex(const ProjComplex& c);

  const AlgebraPtr& algebra_ptr() const noexcept { return h_; }
  const std::vector<DSummand>& summands() const noexcept { return summands_; }
  const ProjComplex& complex() const noexcept { return complex_; }
  int size() const noexcept { return static_cast<int>(summands_.size()); }
  bool is_zero() const noexcept { return summands_.empty(); }
  int min_shift() const;
  int max_shift() const;

  DerivedObject summand(int i) const;
  DerivedObject shifted(int k) const;
  DerivedObject reordered(const std::vector<int>& order) const;
  /// Drop summand i, or replace it by the summands of x (kept at position i).
  DerivedObject without(int i) const;
  DerivedObject replaced(int i, const DerivedObject& x) const;

 private:
  AlgebraPtr h_;
  std::vector<DSummand> summands_;
  ProjComplex complex_;
};

DerivedObject direct_sum(const DerivedObject& x, const DerivedObject& y);
std::string summand_label(const DSummand& s);
std::string object_label(const DerivedObject& x);
bool same_class(const DSummand& a, const DSummand& b);

struct DerivedMorphism {
  DerivedObject source;
  DerivedObject target;
  ChainMap map;
};

/// dim Hom(X, Y) from the module-level formula.
int dhom_dim(const DerivedObject& x, const DerivedObject& y);
/// Basis of Hom(X, Y) as chain maps between the projective realizations.
std::vector<DerivedMorphism> dhom_basis(const DerivedObject& x, const DerivedObject& y);
DerivedMorphism compose(const DerivedMorphism& g, const DerivedMorphism& f);

struct Triangle {
  DerivedObject cone;        // canonical form
  ProjComplex raw;           // mapping cone as computed
  ChainMap into;             // Y -> raw
  ChainMap out;              // raw -> X[1]
};
/// Cone of f : X -> Y.
Triangle cone(const DerivedMorphism& f);

/// Positions of the summands, ordered by shift and then along Hom.
/// Throws CycleDetected if Hom among same-shift summands has a cycle.
std::vector<int> canonical_ordering(const DerivedObject& t);

struct SiltingCertificate {
  bool presilting = false;
  bool silting = false;
  bool basic = true;            // false: duplicate summand classes (NonBasic)
  int distinct_classes = 0;
  int rank = 0;                 // vertex count of H
  std::vector<std::string> checks;   // "i j m" triples verified to vanish
  std::string failure;          // first obstruction, empty if none
};
SiltingCertificate is_presilting(const DerivedObject& t);
SiltingCertificate is_silting(const DerivedObject& t);

struct Mutation {
  DerivedObject result;        // N replaces M in place
  DerivedObject approximation; // T'_M, the target (left) or source (right) of the approximation
  DerivedObject exchanged;     // N
};
/// Triangle M -> T'_M -> N -> M[1] with a minimal left add(T/M)-approximation.
Mutation left_mutation(const DerivedObject& t, int position);
/// Triangle N -> T'_M -> M -> N[1] with a minimal right add(T/M)-approximation.
Mutation right_mutation(const DerivedObject& t, int position);

/// Indecomposables M of H with Hom(D, M[Z]) = 0.
std::vector<Module> perpendicular_category(const DerivedObject& d, const IndecCatalog& cat);
/// Hom(D, Y[i]) = 0 for all i.
bool hom_orthogonal(const DerivedObject& d, const DerivedObject& y);

inline constexpr int kCompletionWindowCap = 8;

struct PerpCompletion {
  DerivedObject complement;             // D
  DerivedObject initial;                // greedy completion before the mutation loop
  std::vector<std::vector<int>> p_trace;  // per complement summand, the counter after each step
  int mutations = 0;
};
/// D with N + D silting and Hom(D, N[Z]) = 0. Needs the catalog of ind H.
/// The initial greedy completion searches shifts within window_cap of N.
PerpCompletion perp_completion(const DerivedObject& n, const IndecCatalog& cat, int window_cap = kCompletionWindowCap);

struct SiltingReduction {
  DerivedObject s_n;
  AssociativeAlgebra end_t_mod_ed;
  AssociativeAlgebra end_s_n;
  int iterations = 0;
};
/// T silting, D given by summand positions of T.
SiltingReduction silting_reduce(const DerivedObject& t, const std::vector<int>& d_positions);

bool is_two_term(const DerivedObject& t);

/// Hom table for End of a list of indecomposable objects, via chain maps.
HomTable derived_hom_table(const std::vector<DerivedObject>& objs);
AssociativeAlgebra derived_endomorphism_algebra(const std::vector<DerivedObject>& objs);

/// The perpendicular category as a module category: its Ext-projectives, the
/// algebra B = End of their sum, and the functor Hom(P, -).
struct PerpendicularModel {
  std::vector<Module> objects;
  std::vector<Module> ext_projectives;
  ModuleEndomorphisms end;
  AlgebraPresentation presentation;
};
PerpendicularModel perpendicular_model(const DerivedObject& d, const IndecCatalog& cat);
/// F(X) = Hom(P, X) as a module over the presented algebra.
Module perpendicular_functor(const PerpendicularModel& m, const Module& x);

}  // namespace silt

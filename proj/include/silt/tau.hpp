#pragma once

#include <vector>

#include "silt/assoc_algebra.hpp"
#include "silt/classify.hpp"
#include "silt/endo.hpp"
#include "silt/module.hpp"

namespace silt {

/// Hom(Z_i, tau Z_j) = 0 for all pairs of summands, i = j included.
bool is_tau_rigid(const std::vector<Module>& summands);
bool is_tau_rigid(const Module& z);

struct BongartzCompletion {
  std::vector<int> summands;     // catalog indices, increasing
  std::vector<int> z_positions;  // position in `summands` of each summand of Z
};

/// Ext-projectives of the torsion class of modules X with Hom(X, tau Z) = 0.
/// Throws InvalidInput if Z is not tau-rigid; the result is checked to be
/// tau-tilting containing Z.
BongartzCompletion bongartz_completion(const IndecCatalog& cat, const std::vector<Module>& z);

struct TauReduction {
  BongartzCompletion completion;
  std::vector<Module> u;      // summands of U_Z
  AssociativeAlgebra b;       // End(U_Z)
  AssociativeAlgebra c;       // End(U_Z) / <e_Z>
  AlgebraPresentation presentation;
};

TauReduction tau_tilting_reduction(const IndecCatalog& cat, const std::vector<Module>& z);

inline constexpr int kSupportVertexCap = 8;

struct SupportTauTilting {
  std::vector<int> modules;  // catalog indices of the tau-rigid part M
  std::vector<int> cut;      // vertices v with P(v) in the projective part
};

/// All support tau-tilting pairs (M, P) by exhaustive search over basic
/// tau-rigid subsets of the catalog. Refuses algebras above `max_vertices`.
std::vector<SupportTauTilting> enumerate_support_tau_tilting(const IndecCatalog& cat,
                                                             int max_vertices = kSupportVertexCap);

}  // namespace silt

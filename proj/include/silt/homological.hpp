#pragma once

#include <limits>
#include <vector>

#include "silt/module.hpp"

namespace silt {

/// pd/id of the zero module.
inline constexpr int kDimNegInf = -1;
/// Returned when no finite resolution is found within the cap.
inline constexpr int kDimInfinite = std::numeric_limits<int>::max() / 2;
inline constexpr int kResolutionCap = 64;

struct ProjectiveCover {
  std::vector<int> tops;   // P = projective_sum(tops)
  std::vector<Vec> gens;   // image of the i-th top generator in M_{tops[i]}
  ModuleMorphism map;      // P -> M, surjective, minimal
};

/// Minimal cover through a complement of the radical at each vertex.
ProjectiveCover projective_cover(const Module& m);
/// Complement (as columns) of rad M inside M_v, i.e. a basis of the top at v.
Matrix top_basis(const Module& m, int v);

struct ShortExactSequence {
  ModuleMorphism iota;  // L -> M
  ModuleMorphism pi;    // M -> N

  const Module& left() const { return iota.source; }
  const Module& middle() const { return iota.target; }
  const Module& right() const { return pi.target; }
  /// Mono, epi, exact in the middle.
  bool is_exact() const;
};

/// First syzygy with its inclusion into the projective cover.
struct Syzygy {
  ProjectiveCover cover;
  ModuleMorphism inclusion;  // Omega M -> P0
};
Syzygy syzygy(const Module& m);

/// Tops of the minimal projective resolution, term by term (P0 first).
/// Stops at the first zero syzygy or after `cap` steps.
std::vector<std::vector<int>> projective_resolution(const Module& m, int cap = kResolutionCap);

int projective_dimension(const Module& m);
/// Computed as the projective dimension of D(m) over the opposite algebra.
int injective_dimension(const Module& m);
bool is_projective(const Module& m);
bool is_injective(const Module& m);

struct Ext1 {
  Syzygy syz;                          // presentation data for M
  std::vector<ModuleMorphism> classes; // representatives Omega M -> N
  Module n;
  int dim() const { return static_cast<int>(classes.size()); }
};

/// Ext^1(M, N) = Hom(Omega M, N) / (restrictions of Hom(P0, N)).
Ext1 ext1_basis(const Module& m, const Module& n);
int ext1_dim(const Module& m, const Module& n);
/// 0 -> N -> E -> M -> 0 realising the given combination of classes.
ShortExactSequence extension(const Ext1& ext, const Vec& coeffs);

/// Minimal presentation P1 -> P0 -> M -> 0: tops of both terms and
/// x[i][j] in e_{a_i} A e_{b_j}, the image of the j-th generator of P1 in the
/// i-th summand of P0.
struct Presentation {
  std::vector<int> p0_tops;
  std::vector<int> p1_tops;
  std::vector<std::vector<Vec>> x;
};
Presentation minimal_presentation(const Module& m);

/// Auslander-Reiten translate. Zero on projectives.
Module tau(const Module& m);
/// D tau_op D; zero on injectives.
Module tau_inverse(const Module& m);

/// Krull-Schmidt decomposition into indecomposables (order follows the
/// splitting, callers sort if they need to). Requires p > dim M; throws
/// IdempotentLiftFailure if the endomorphism ring does not split.
std::vector<Module> decompose(const Module& m);
bool is_indecomposable(const Module& m);

/// Structure of End(M): basis morphisms and the product table in that basis
/// (product(i, j) = basis[i] after basis[j]).
struct EndRing {
  std::vector<ModuleMorphism> basis;
  std::vector<Vec> table;
  int dim() const { return static_cast<int>(basis.size()); }
};
EndRing endomorphism_ring(const Module& m);
/// Jacobson radical via the trace form (exact when p > dim M), as columns of
/// coordinates in the EndRing basis.
Matrix end_radical(const EndRing& e);

/// M e A -> M -> M / M e A for e = sum of idempotents at `e_vertices`.
ShortExactSequence canonical_sequence(const Module& m, const std::vector<int>& e_vertices);

}  // namespace silt

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "silt/module.hpp"

namespace silt {

inline constexpr int kDefaultKnittingCap = 10000;

/// All indecomposables of a representation-directed algebra, up to iso.
struct IndecCatalog {
  AlgebraPtr algebra;
  std::vector<Module> modules;
  std::vector<std::vector<int>> hom;             // hom[i][j] = dim Hom(M_i, M_j)
  std::vector<std::vector<int>> hom_digraph;     // i -> j iff i != j and hom[i][j] > 0
  std::vector<std::pair<int, int>> ar_edges;     // irreducible maps, deduplicated
  std::vector<std::pair<int, int>> tau_links;    // (M, tau M)
  std::vector<int> projectives;                  // index of P(v)
  std::vector<int> injectives;                   // index of I(v)
  std::vector<int> pd, id;
  int meshes = 0;
  bool directed = true;                          // hom_digraph has no cycle

  int size() const noexcept { return static_cast<int>(modules.size()); }
  /// Index of the member isomorphic to m, or -1.
  int find(const Module& m) const;
};

/// Knits the AR quiver starting from the projectives. Throws KnittingDiverged
/// once more than `mesh_cap` AR sequences have been built.
IndecCatalog enumerate_indecomposables(const AlgebraPtr& a, int mesh_cap = kDefaultKnittingCap);

/// Interval modules of a linear monomial algebra n -> ... -> 1, read off from
/// the path basis alone. Throws InvalidInput for any other quiver.
std::vector<Module> interval_indecomposables(const AlgebraPtr& a);

/// Short name built from composition factors, e.g. "432" or "2,10,11".
std::string module_label(const Module& m);

struct Membership {
  std::vector<int> LA;
  std::vector<int> RA;
};
Membership la_ra_membership(const IndecCatalog& cat);

struct Witness {
  std::string check;      // which verdict it refutes
  int module = -1;        // catalog index, when a single module is the witness
  std::vector<int> path;  // catalog indices, when a path is
  std::string detail;
};

struct ClassificationReport {
  int gl_dim = 0;
  bool is_hereditary = false;
  bool is_shod = false;
  bool is_strictly_shod = false;
  bool is_weakly_shod = false;
  int max_injective_to_projective = 0;  // -1 when unbounded
  std::vector<int> LA, RA;
  std::vector<int> laura_complement, left_glued_complement, right_glued_complement;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

ClassificationReport classify(const IndecCatalog& cat);
ClassificationReport classify(const AlgebraPtr& a, int mesh_cap = kDefaultKnittingCap);

/// Global dimension from the simples; kDimInfinite if some resolution runs past the cap.
int global_dimension(const AlgebraPtr& a);

}  // namespace silt

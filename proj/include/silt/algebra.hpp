#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "silt/matrix.hpp"
#include "silt/quiver.hpp"

namespace silt {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

inline constexpr int kDefaultMaxPathLength = 30;

/// kQ/I for an admissible ideal I. Immutable once built; obtain through
/// build_algebra.
class BoundQuiverAlgebra {
 public:
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  int vertex_count() const noexcept { return quiver_.vertex_count(); }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }

  /// Basis of residue paths. The trivial paths come first, e_v at index v.
  const std::vector<Path>& basis() const noexcept { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(i); }
  int idempotent(int v) const noexcept { return v; }

  /// Every path of length >= this bound is zero in the algebra.
  int nilpotency_bound() const noexcept { return bound_; }

  /// Coordinates of an arbitrary path (zero when it is long enough or
  /// passes through the ideal).
  Vec normal_form(const Path& p) const;
  /// b_i * b_j in basis coordinates (concatenation b_i then b_j).
  const Vec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Basis indices of paths from u to v, i.e. a basis of e_u A e_v.
  const std::vector<int>& paths_between(int u, int v) const {
    return between_[static_cast<std::size_t>(u) * vertex_count() + v];
  }
  /// Cartan matrix entry dim e_u A e_v.
  int cartan(int u, int v) const { return static_cast<int>(paths_between(u, v).size()); }

  /// A^op, built on first use and cached.
  AlgebraPtr opposite() const;

  /// Canonical text form; equal strings mean identical presentations.
  std::string key() const;

 private:
  friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&, int);

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  int bound_ = 1;
  int max_len_ = kDefaultMaxPathLength;
  // normal forms of every path of length < bound_, keyed by (source, arrows)
  std::map<std::vector<int>, Vec> nf_;
  std::vector<Vec> table_;
  std::vector<std::vector<int>> between_;

  mutable std::once_flag op_once_;
  mutable AlgebraPtr op_;
};

/// Builds kQ/<rels>. Throws NotFiniteDimensional when paths survive at
/// length max_len, InvalidInput for non-admissible relations.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                         int max_len = kDefaultMaxPathLength);

/// A/<e> for e the sum of the vertex idempotents in `cut`. The surviving
/// vertices keep their relative order.
AlgebraPtr idempotent_quotient(const BoundQuiverAlgebra& a, const std::vector<int>& cut);

AlgebraPtr opposite_algebra(const BoundQuiverAlgebra& a);

/// Linear quiver n -> n-1 -> ... -> 1 with arrows a<i>: i+1 -> i and the
/// given length-2 zero relations a<i+1>.a<i> for i in `killed` (1-based i).
AlgebraPtr linear_monomial_algebra(int n, const std::vector<int>& killed);

/// A(n,k): zero relations a<i+1>.a<i> for 1 <= i <= k-2.
AlgebraPtr generate_Ank(int n, int k);

/// Path algebra of the linear A_n quiver (= A(n,2)).
inline AlgebraPtr linear_An(int n) { return linear_monomial_algebra(n, {}); }

}  // namespace silt

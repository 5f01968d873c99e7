#pragma once

#include <string>
#include <vector>

#include "silt/algebra.hpp"
#include "silt/matrix.hpp"

namespace silt {

/// Finite-dimensional algebra given by a basis and structure constants, with
/// a complete set of orthogonal vertex idempotents. Each basis element x lies
/// in one block e_s x e_t; (s, t) is stored in quiver orientation, so x * y
/// can be nonzero only when t(x) == s(y).
class AssociativeAlgebra {
 public:
  struct Block {
    int source = 0;
    int target = 0;
  };

  AssociativeAlgebra() = default;
  AssociativeAlgebra(int vertex_count, std::vector<Block> blocks, std::vector<std::string> labels,
                     std::vector<int> idempotents, std::vector<Vec> table);

  int dim() const noexcept { return static_cast<int>(blocks_.size()); }
  int vertex_count() const noexcept { return vertex_count_; }
  const Block& block(int i) const { return blocks_.at(i); }
  const std::string& label(int i) const { return labels_.at(i); }
  int idempotent(int v) const { return idempotents_.at(v); }
  const std::vector<int>& idempotents() const noexcept { return idempotents_; }

  const Vec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Basis indices in block (s, t).
  std::vector<int> block_indices(int s, int t) const;

  /// Throws InvalidInput if the table is not associative, the idempotents
  /// are not orthogonal with sum 1, or products leave their blocks.
  void validate() const;

 private:
  int vertex_count_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::string> labels_;
  std::vector<int> idempotents_;
  std::vector<Vec> table_;
};

AssociativeAlgebra as_associative(const BoundQuiverAlgebra& a);

/// eAe for e the sum of the idempotents at `keep` (vertices renumbered in
/// increasing order). Multiplication is taken in A, so paths may pass
/// through dropped vertices.
AssociativeAlgebra corner_algebra(const BoundQuiverAlgebra& a, const std::vector<int>& keep);

/// B/<e_Z>: quotient by the two-sided ideal spanned by products through the
/// vertices in Z. Surviving vertices keep their relative order.
AssociativeAlgebra quotient_by_vertices(const AssociativeAlgebra& b, const std::vector<int>& z);

}  // namespace silt

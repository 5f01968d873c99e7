#pragma once

#include <optional>
#include <vector>

#include "silt/module.hpp"

namespace silt {

/// A map between sums of indecomposable projectives P(s_0) + ... -> P(t_0) + ...,
/// stored as a matrix with entries in A: entry (j, i) lies in e_{t_j} A e_{s_i}
/// and is the image of the i-th generator in the j-th target summand.
class ProjMap {
 public:
  ProjMap() = default;
  ProjMap(AlgebraPtr a, std::vector<int> source, std::vector<int> target);

  const AlgebraPtr& algebra_ptr() const noexcept { return a_; }
  const std::vector<int>& source() const noexcept { return source_; }
  const std::vector<int>& target() const noexcept { return target_; }

  Vec& entry(int j, int i) { return entries_[static_cast<std::size_t>(j) * source_.size() + i]; }
  const Vec& entry(int j, int i) const { return entries_[static_cast<std::size_t>(j) * source_.size() + i]; }

  bool is_zero() const noexcept;
  /// Coordinates over the path bases of all entries.
  int coordinate_count() const;
  Vec flatten() const;
  static ProjMap unflatten(AlgebraPtr a, std::vector<int> source, std::vector<int> target, const Vec& v);

  ProjMap& operator+=(const ProjMap& o);
  ProjMap& operator*=(Fp s);

 private:
  AlgebraPtr a_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<Vec> entries_;
};

ProjMap compose(const ProjMap& g, const ProjMap& f);  // g o f
ProjMap identity_map(const AlgebraPtr& a, const std::vector<int>& tops);
/// Block matrix between concatenated sums.
ProjMap block_map(const AlgebraPtr& a, const std::vector<std::vector<int>>& sources,
                  const std::vector<std::vector<int>>& targets, const std::vector<std::vector<const ProjMap*>>& blocks);

Module as_module(const AlgebraPtr& a, const std::vector<int>& tops);
ModuleMorphism as_morphism(const ProjMap& f);
/// Inverse of as_morphism for maps between projective sums.
ProjMap from_morphism(const ModuleMorphism& f, const std::vector<int>& source, const std::vector<int>& target);

/// Bounded complex of projectives, cohomological degrees lo .. lo + size - 1.
struct ProjComplex {
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ProjMap> d;  // d[i] : terms[i] -> terms[i + 1]

  int hi() const noexcept { return lo + static_cast<int>(terms.size()) - 1; }
  std::vector<int> term(int degree) const;
  /// Differential out of `degree`, zero map outside the range.
  ProjMap differential(int degree) const;
  bool is_complex() const;
};

ProjComplex zero_complex(const AlgebraPtr& a);
ProjComplex direct_sum(const std::vector<ProjComplex>& cs);
/// X[k]: degrees move down by k and differentials pick up (-1)^k.
ProjComplex shift(const ProjComplex& c, int k);
/// Minimal projective resolution of m with P_0 in degree -s, so that the
/// complex realizes m[s].
ProjComplex resolution_complex(const Module& m, int s);

struct ChainMap {
  std::vector<ProjMap> f;  // indexed by degree - lo of the source
  int lo = 0;
};
ChainMap zero_chain_map(const ProjComplex& c, const ProjComplex& d);
ChainMap compose(const ChainMap& g, const ChainMap& f, const ProjComplex& c, const ProjComplex& d,
                 const ProjComplex& e);
bool is_chain_map(const ChainMap& f, const ProjComplex& c, const ProjComplex& d);

/// Hom in the homotopy category: chain maps modulo null-homotopic ones.
class HomK {
 public:
  HomK(const ProjComplex& c, const ProjComplex& d);
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<ChainMap>& basis() const noexcept { return basis_; }
  /// Coordinates of a chain map in the chosen basis, nullopt if it is not a chain map.
  std::optional<Vec> coordinates(const ChainMap& f) const;
  Vec flatten(const ChainMap& f) const;
  ChainMap combination(const Vec& coeffs) const;

 private:
  ProjComplex c_, d_;
  std::vector<int> degrees_;  // degrees where both complexes are nonzero
  std::vector<ChainMap> basis_;
  Matrix frame_;              // chosen cycle basis followed by boundaries
  ChainMap unflatten(const Vec& v) const;
};

struct Cone {
  ProjComplex complex;
  ChainMap into;   // D -> cone
  ChainMap out;    // cone -> C[1]
};
Cone mapping_cone(const ChainMap& f, const ProjComplex& c, const ProjComplex& d);

/// Cohomology module in the given degree.
Module cohomology(const ProjComplex& c, int degree);

}  // namespace silt

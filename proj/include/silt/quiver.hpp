#pragma once

#include <string>
#include <vector>

#include "silt/field.hpp"

namespace silt {

// Vertices are 0-based in the C++ API; file formats and the CLI are 1-based.

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }

  /// Returns the new arrow's index. Throws InvalidInput on duplicate names or
  /// bad endpoints.
  int add_arrow(std::string name, int source, int target);
  /// -1 when absent.
  int find_arrow(const std::string& name) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// A path in traversal order. A trivial path has no arrows and source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const noexcept { return static_cast<int>(arrows.size()); }
  bool is_trivial() const noexcept { return arrows.empty(); }

  static Path trivial(int v) { return Path{v, v, {}}; }
  /// Builds and validates a path from arrow indices.
  static Path from_arrows(const Quiver& q, std::vector<int> arrows);

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
  friend bool operator<(const Path& a, const Path& b);
};

/// Concatenation p then q; requires p.target == q.source.
Path concat(const Path& p, const Path& q);

/// "a.b.c" style rendering; trivial paths render as "e<v+1>".
std::string path_string(const Quiver& q, const Path& p);

struct RelationTerm {
  Fp coeff;
  Path path;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

/// Checks parallel paths of length >= 2 in every term.
void validate_relation(const Quiver& q, const Relation& r);

/// Path order used for leading terms: length first, then lexicographic on
/// arrow names, with source vertex as the final tie-break.
bool path_less(const Quiver& q, const Path& a, const Path& b);

}  // namespace silt

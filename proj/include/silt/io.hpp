#pragma once

#include <filesystem>
#include <string>

#include "silt/algebra.hpp"
#include "silt/derived.hpp"
#include "silt/module.hpp"

namespace silt {

// Text formats. Vertices are 1-based, '#' starts a comment.
//
//   vertices 3
//   arrow a 2 1
//   arrow b 3 2
//   relation 1 b.a
//
//   module
//   dim 1 1 0
//   map a 1x1 [ 1 ]
//
//   dobj
//   summand 0 P(1)
//   summand 1 interval(2,3)
//   summand -1 other.mod

AlgebraPtr parse_algebra(const std::string& text, int max_len = kDefaultMaxPathLength);
AlgebraPtr read_algebra(const std::filesystem::path& file, int max_len = kDefaultMaxPathLength);
std::string format_algebra(const BoundQuiverAlgebra& a);

Module parse_module(const std::string& text, const AlgebraPtr& a);
Module read_module(const std::filesystem::path& file, const AlgebraPtr& a);
std::string format_module(const Module& m);

/// P(i), I(i), S(i), interval(i,j); nullopt-like empty module is never returned,
/// bad names throw ParseError.
Module builtin_module(const std::string& ref, const AlgebraPtr& a);
/// Inverse of builtin_module where possible, empty string otherwise.
std::string builtin_name(const Module& m);

/// Module references that are not builtins are resolved relative to `base`.
DerivedObject parse_dobj(const std::string& text, const AlgebraPtr& h, const std::filesystem::path& base = {});
DerivedObject read_dobj(const std::filesystem::path& file, const AlgebraPtr& h);
/// Throws InvalidInput if a summand has no builtin name.
std::string format_dobj(const DerivedObject& x);

}  // namespace silt

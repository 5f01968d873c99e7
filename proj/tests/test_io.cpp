#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "silt/classify.hpp"
#include "silt/errors.hpp"
#include "silt/io.hpp"
#include "test_support.hpp"

using namespace silt;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(AlgebraFile, RoundTripsTheFamily) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto a = generate_Ank(n, k);
      const std::string text = format_algebra(*a);
      const auto b = parse_algebra(text);
      EXPECT_EQ(format_algebra(*b), text);
      EXPECT_EQ(b->dim(), a->dim());
    }
}

TEST(AlgebraFile, CommutativeSquare) {
  const auto a = parse_algebra(R"(# square with one commutativity relation
vertices 4
arrow a 4 2
arrow b 2 1
arrow c 4 3
arrow d 3 1
relation 1 a.b + -1 c.d
)");
  // 4 idempotents, 4 arrows, one path of length two left
  EXPECT_EQ(a->dim(), 9);
  EXPECT_EQ(parse_algebra(format_algebra(*a))->dim(), 9);
}

TEST(AlgebraFile, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of([] { parse_algebra("vertices 2\narrow a 2 1\nfrobnicate\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { parse_algebra("vertices 2\narrow a 3 1\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { parse_algebra("vertices 2\narrow a 2 1\nrelation 1 a.z\n"); }).find("unknown arrow"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_algebra("vertices x\n"); }).find("bad integer"), std::string::npos);
  EXPECT_FALSE(error_of([] { parse_algebra("arrow a 2 1\n"); }).empty());
  EXPECT_FALSE(error_of([] { parse_algebra(""); }).empty());
  EXPECT_THROW(read_algebra("/nonexistent/a.alg"), ParseError);
}

TEST(ModuleFile, RoundTripsEveryIndecomposable) {
  const auto a = generate_Ank(5, 3);
  const auto cat = enumerate_indecomposables(a);
  for (const auto& m : cat.modules) {
    const Module back = parse_module(format_module(m), a);
    EXPECT_TRUE(is_isomorphic(back, m)) << format_module(m);
    EXPECT_FALSE(builtin_name(m).empty());
    EXPECT_TRUE(is_isomorphic(builtin_module(builtin_name(m), a), m));
  }
}

TEST(ModuleFile, Errors) {
  const auto a = linear_An(2);
  EXPECT_NE(error_of([&] { parse_module("module\ndim 1 1\nmap a1 2x1 [ 1 0 ]\n", a); }).find("line 3: map a1 must be 1x1"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_module("module\ndim 1 1\nmap a1 1x1 [ 1 0 ]\n", a); }).find("entries"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_module("module\nmap a1 1x1 [ 1 ]\n", a); }).find("before"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_module("module\ndim 1\n", a); }).find("2 dimensions"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_module("module\ndim 1 1\nmap b 1x1 [ 1 ]\n", a); }).find("unknown arrow"),
            std::string::npos);
  EXPECT_THROW(builtin_module("P(3)", a), ParseError);
  EXPECT_THROW(builtin_module("Q(1)", a), ParseError);
}

TEST(DerivedFile, BuiltinsAndRelativeFiles) {
  const auto h = linear_An(3);
  const auto dir = std::filesystem::temp_directory_path() / "silt_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "m.mod") << format_module(interval(h, 1, 2));
    std::ofstream(dir / "t.dobj") << "dobj\nsummand 0 P(1)\nsummand 1 m.mod\nsummand -2 S(3)\n";
  }
  const auto t = read_dobj(dir / "t.dobj", h);
  ASSERT_EQ(t.size(), 3);
  EXPECT_EQ(t.summands()[1].shift, 1);
  EXPECT_TRUE(is_isomorphic(t.summands()[1].module, interval(h, 1, 2)));
  const auto back = parse_dobj(format_dobj(t), h);
  ASSERT_EQ(back.size(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(same_class(back.summands()[i], t.summands()[i]));
  EXPECT_THROW(parse_dobj("dobj\nsummand x P(1)\n", h), ParseError);
  EXPECT_THROW(parse_dobj("dobj\nsummand 0 missing.mod\n", h, dir), ParseError);
  std::filesystem::remove_all(dir);
}

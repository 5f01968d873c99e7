#include "silt/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "silt/errors.hpp"
#include "silt/homological.hpp"

namespace silt {

namespace {

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Tokenized non-empty lines with comments stripped; '[' and ']' are dropped.
std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    for (char& c : raw)
      if (c == '[' || c == ']') c = ' ';
    std::istringstream ls(raw);
    Line l{no, {}};
    for (std::string t; ls >> t;) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what);
}

long long to_int(const Line& l, const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(l, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(l, "bad integer '" + s + "'");
  }
}

int vertex(const Line& l, const std::string& s, int n) {
  const long long v = to_int(l, s);
  if (v < 1 || v > n) fail(l, "vertex " + s + " out of range 1.." + std::to_string(n));
  return static_cast<int>(v - 1);
}

Path parse_path(const Line& l, const Quiver& q, const std::string& s) {
  std::vector<int> arrows;
  std::size_t start = 0;
  while (true) {
    const auto dot = s.find('.', start);
    const std::string name = s.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    const int a = q.find_arrow(name);
    if (a < 0) fail(l, "unknown arrow '" + name + "'");
    arrows.push_back(a);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  try {
    return Path::from_arrows(q, arrows);
  } catch (const SiltError& e) {
    fail(l, e.what());
  }
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text, int max_len) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].tokens[0] != "vertices" || lines[0].tokens.size() != 2)
    throw ParseError("algebra file must start with 'vertices N'");
  const long long n = to_int(lines[0], lines[0].tokens[1]);
  if (n < 1) fail(lines[0], "need at least one vertex");
  Quiver q(static_cast<int>(n));
  std::vector<Relation> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "arrow") {
      if (t.size() != 4) fail(l, "expected 'arrow <name> <source> <target>'");
      try {
        q.add_arrow(t[1], vertex(l, t[2], q.vertex_count()), vertex(l, t[3], q.vertex_count()));
      } catch (const InvalidInput& e) {
        fail(l, e.what());
      }
    } else if (t[0] == "relation") {
      Relation r;
      std::size_t k = 1;
      while (k < t.size()) {
        if (k + 1 >= t.size()) fail(l, "expected '<coeff> <path>'");
        r.terms.push_back({Fp(to_int(l, t[k])), parse_path(l, q, t[k + 1])});
        k += 2;
        if (k < t.size()) {
          if (t[k] != "+") fail(l, "expected '+' between terms");
          ++k;
        }
      }
      if (r.terms.empty()) fail(l, "empty relation");
      rels.push_back(std::move(r));
    } else {
      fail(l, "unknown keyword '" + t[0] + "'");
    }
  }
  return build_algebra(q, rels, max_len);
}

AlgebraPtr read_algebra(const std::filesystem::path& file, int max_len) { return parse_algebra(slurp(file), max_len); }

std::string format_algebra(const BoundQuiverAlgebra& a) {
  std::ostringstream os;
  const Quiver& q = a.quiver();
  os << "vertices " << a.vertex_count() << "\n";
  for (const auto& ar : q.arrows()) os << "arrow " << ar.name << " " << ar.source + 1 << " " << ar.target + 1 << "\n";
  for (const auto& r : a.relations()) {
    os << "relation";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      if (i) os << " +";
      os << " " << r.terms[i].coeff.signed_value() << " " << path_string(q, r.terms[i].path);
    }
    os << "\n";
  }
  return os.str();
}

Module parse_module(const std::string& text, const AlgebraPtr& a) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"module"})
    throw ParseError("module file must start with 'module'");
  const int n = a->vertex_count();
  const Quiver& q = a->quiver();
  std::vector<int> dims;
  std::vector<Matrix> maps(q.arrow_count());
  std::vector<bool> given(q.arrow_count(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "dim") {
      if (static_cast<int>(t.size()) != n + 1) fail(l, "expected " + std::to_string(n) + " dimensions");
      dims.clear();
      for (int v = 0; v < n; ++v) {
        const long long d = to_int(l, t[v + 1]);
        if (d < 0) fail(l, "negative dimension");
        dims.push_back(static_cast<int>(d));
      }
    } else if (t[0] == "map") {
      if (dims.empty()) fail(l, "'dim' must come before 'map'");
      if (t.size() < 3) fail(l, "expected 'map <arrow> <rows>x<cols> ...'");
      const int ai = q.find_arrow(t[1]);
      if (ai < 0) fail(l, "unknown arrow '" + t[1] + "'");
      static const std::regex shape(R"((\d+)x(\d+))");
      std::smatch m;
      if (!std::regex_match(t[2], m, shape)) fail(l, "bad shape '" + t[2] + "'");
      const int r = std::stoi(m[1]), c = std::stoi(m[2]);
      const auto& ar = q.arrow(ai);
      if (r != dims[ar.target] || c != dims[ar.source])
        fail(l, "map " + t[1] + " must be " + std::to_string(dims[ar.target]) + "x" + std::to_string(dims[ar.source]));
      if (static_cast<int>(t.size()) - 3 != r * c) fail(l, "expected " + std::to_string(r * c) + " entries");
      Matrix mat(r, c);
      for (int x = 0; x < r * c; ++x) mat(x / c, x % c) = Fp(to_int(l, t[3 + x]));
      maps[ai] = std::move(mat);
      given[ai] = true;
    } else {
      fail(l, "unknown keyword '" + t[0] + "'");
    }
  }
  if (dims.empty()) throw ParseError("module file has no 'dim' line");
  for (int ai = 0; ai < q.arrow_count(); ++ai)
    if (!given[ai]) maps[ai] = Matrix(dims[q.arrow(ai).target], dims[q.arrow(ai).source]);
  return Module(a, dims, maps);
}

Module read_module(const std::filesystem::path& file, const AlgebraPtr& a) { return parse_module(slurp(file), a); }

std::string format_module(const Module& m) {
  std::ostringstream os;
  os << "module\ndim";
  for (int d : m.dims()) os << " " << d;
  os << "\n";
  const Quiver& q = m.algebra().quiver();
  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const Matrix& x = m.map(ai);
    if (x.is_zero()) continue;
    os << "map " << q.arrow(ai).name << " " << x.rows() << "x" << x.cols() << " [";
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) os << " " << x(r, c).signed_value();
    os << " ]\n";
  }
  return os.str();
}

Module builtin_module(const std::string& ref, const AlgebraPtr& a) {
  static const std::regex one(R"(([PIS])\((\d+)\))");
  static const std::regex two(R"(interval\((\d+),(\d+)\))");
  const int n = a->vertex_count();
  auto check = [&](int v) {
    if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range in '" + ref + "'");
    return v - 1;
  };
  std::smatch m;
  if (std::regex_match(ref, m, one)) {
    const int v = check(std::stoi(m[2]));
    switch (m.str(1)[0]) {
      case 'P': return projective(a, v);
      case 'I': return injective(a, v);
      default: return simple(a, v);
    }
  }
  if (std::regex_match(ref, m, two)) return interval(a, check(std::stoi(m[1])), check(std::stoi(m[2])));
  throw ParseError("unknown module reference '" + ref + "'");
}

std::string builtin_name(const Module& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  const int n = a->vertex_count();
  for (int v = 0; v < n; ++v) {
    const std::string id = std::to_string(v + 1);
    if (is_isomorphic(m, projective(a, v))) return "P(" + id + ")";
    if (is_isomorphic(m, injective(a, v))) return "I(" + id + ")";
    if (is_isomorphic(m, simple(a, v))) return "S(" + id + ")";
  }
  int lo = -1, hi = -1;
  for (int v = 0; v < n; ++v)
    if (m.dim(v) > 0) {
      if (lo < 0) lo = v;
      hi = v;
    }
  if (lo >= 0 && is_isomorphic(m, interval(a, lo, hi)))
    return "interval(" + std::to_string(lo + 1) + "," + std::to_string(hi + 1) + ")";
  return {};
}

DerivedObject parse_dobj(const std::string& text, const AlgebraPtr& h, const std::filesystem::path& base) {
  const auto lines = lines_of(text);
  std::vector<DSummand> s;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t.size() == 1 && t[0] == "dobj") continue;
    if (t[0] != "summand" || t.size() != 3) fail(l, "expected 'summand <shift> <module>'");
    const int shift = static_cast<int>(to_int(l, t[1]));
    Module m;
    try {
      m = builtin_module(t[2], h);
    } catch (const ParseError&) {
      m = read_module(base / t[2], h);
    }
    s.push_back({std::move(m), shift});
  }
  return DerivedObject::from_summands(h, s);
}

DerivedObject read_dobj(const std::filesystem::path& file, const AlgebraPtr& h) {
  return parse_dobj(slurp(file), h, file.parent_path());
}

std::string format_dobj(const DerivedObject& x) {
  std::ostringstream os;
  os << "dobj\n";
  for (const auto& s : x.summands()) {
    const std::string name = builtin_name(s.module);
    if (name.empty()) throw InvalidInput("summand " + summand_label(s) + " has no builtin name");
    os << "summand " << s.shift << " " << name << "\n";
  }
  return os.str();
}

}  // namespace silt

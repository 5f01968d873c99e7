#include "silt/quiver.hpp"

#include <algorithm>
#include <tuple>

#include "silt/errors.hpp"

namespace silt {

int Quiver::add_arrow(std::string name, int source, int target) {
  if (name.empty()) throw InvalidInput("arrow name must be nonempty");
  if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
    throw InvalidInput("arrow '" + name + "' has an endpoint outside the vertex range");
  if (find_arrow(name) >= 0) throw InvalidInput("duplicate arrow name '" + name + "'");
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrow_count() - 1;
}

int Quiver::find_arrow(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].name == name) return i;
  return -1;
}

Path Path::from_arrows(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw InvalidInput("from_arrows needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw InvalidInput("arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                         "' are not composable");
  Path p;
  p.source = q.arrow(arrows.front()).source;
  p.target = q.arrow(arrows.back()).target;
  p.arrows = std::move(arrows);
  return p;
}

bool operator<(const Path& a, const Path& b) {
  return std::tie(a.source, a.target, a.arrows) < std::tie(b.source, b.target, b.arrows);
}

Path concat(const Path& p, const Path& q) {
  if (p.target != q.source) throw InvalidInput("concat: paths are not composable");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::string path_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw InvalidInput("empty relation");
  const Path& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.path.length() < 2) throw InvalidInput("relation term '" + path_string(q, t.path) + "' has length < 2");
    if (t.path.source != first.source || t.path.target != first.target)
      throw InvalidInput("relation terms are not parallel");
  }
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    const auto& na = q.arrow(a.arrows[i]).name;
    const auto& nb = q.arrow(b.arrows[i]).name;
    if (na != nb) return na < nb;
  }
  return std::tie(a.source, a.target) < std::tie(b.source, b.target);
}

}  // namespace silt

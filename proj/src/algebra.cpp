#include "silt/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "silt/errors.hpp"

namespace silt {

namespace {

constexpr std::size_t kPathBudget = 200000;

std::vector<int> path_key(const Path& p) {
  std::vector<int> k;
  k.reserve(p.arrows.size() + 1);
  k.push_back(p.source);
  k.insert(k.end(), p.arrows.begin(), p.arrows.end());
  return k;
}

// Merges repeated paths and drops zero coefficients.
Relation normalized(const Relation& r) {
  Relation out;
  for (const auto& t : r.terms) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [&](const RelationTerm& o) { return o.path == t.path; });
    if (it == out.terms.end())
      out.terms.push_back(t);
    else
      it->coeff += t.coeff;
  }
  std::erase_if(out.terms, [](const RelationTerm& t) { return t.coeff.is_zero(); });
  return out;
}

struct PathLevels {
  std::vector<std::vector<Path>> by_len;
  std::size_t total = 0;

  explicit PathLevels(const Quiver& q) {
    by_len.emplace_back();
    for (int v = 0; v < q.vertex_count(); ++v) by_len[0].push_back(Path::trivial(v));
    total = by_len[0].size();
  }

  void extend_to(const Quiver& q, int len) {
    while (static_cast<int>(by_len.size()) <= len) {
      std::vector<Path> next;
      for (const auto& p : by_len.back())
        for (int a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).source != p.target) continue;
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrow(a).target;
          next.push_back(std::move(e));
        }
      total += next.size();
      if (total > kPathBudget)
        throw NotFiniteDimensional("path enumeration exceeded " + std::to_string(kPathBudget) +
                                   " paths; relations do not bound the algebra");
      by_len.push_back(std::move(next));
    }
  }
};

// Ideal generators u.r.v truncated to paths of length <= len, as rows over
// the given column index.
Matrix ideal_rows(const std::vector<Relation>& rels, const PathLevels& levels, int len,
                  const std::map<std::vector<int>, int>& col_of) {
  std::vector<Vec> rows;
  const int ncols = static_cast<int>(col_of.size());
  for (const auto& r : rels) {
    int minlen = len + 1;
    for (const auto& t : r.terms) minlen = std::min(minlen, t.path.length());
    if (minlen > len) continue;
    const int s = r.terms.front().path.source, tg = r.terms.front().path.target;
    for (int lu = 0; lu + minlen <= len; ++lu)
      for (const auto& u : levels.by_len[lu]) {
        if (u.target != s) continue;
        for (int lv = 0; lu + lv + minlen <= len; ++lv)
          for (const auto& v : levels.by_len[lv]) {
            if (v.source != tg) continue;
            Vec row(ncols);
            bool any = false;
            for (const auto& t : r.terms) {
              if (lu + lv + t.path.length() > len) continue;
              const Path w = concat(concat(u, t.path), v);
              row[col_of.at(path_key(w))] += t.coeff;
              any = true;
            }
            if (any) rows.push_back(std::move(row));
          }
      }
  }
  return Matrix::from_rows(ncols, rows);
}

}  // namespace

Vec BoundQuiverAlgebra::normal_form(const Path& p) const {
  if (p.length() >= bound_) return Vec(dim());
  auto it = nf_.find(path_key(p));
  if (it == nf_.end()) throw InvalidInput("normal_form: not a path of this quiver");
  return it->second;
}

Vec BoundQuiverAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], product(i, j));
    }
  }
  return out;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  std::call_once(op_once_, [this] { op_ = opposite_algebra(*this); });
  return op_;
}

std::string BoundQuiverAlgebra::key() const {
  std::ostringstream os;
  os << "vertices " << vertex_count() << '\n';
  for (const auto& a : quiver_.arrows()) os << "arrow " << a.name << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
  for (const auto& r : relations_) {
    os << "relation";
    for (std::size_t i = 0; i < r.terms.size(); ++i)
      os << (i ? " + " : " ") << r.terms[i].coeff.value() << ' ' << path_string(quiver_, r.terms[i].path);
    os << '\n';
  }
  return os.str();
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels_in, int max_len) {
  std::vector<Relation> rels;
  for (const auto& r : rels_in) {
    validate_relation(q, r);
    Relation n = normalized(r);
    if (!n.terms.empty()) rels.push_back(std::move(n));
  }

  PathLevels levels(q);
  const auto desc = [&q](const Path& a, const Path& b) { return path_less(q, b, a); };

  for (int len = 1; len <= max_len; ++len) {
    levels.extend_to(q, len);
    // columns: all paths of length <= len, largest first
    std::vector<Path> cols;
    for (int l = 0; l <= len; ++l) cols.insert(cols.end(), levels.by_len[l].begin(), levels.by_len[l].end());
    std::sort(cols.begin(), cols.end(), desc);
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) col_of[path_key(cols[c])] = c;

    const auto e = rref(ideal_rows(rels, levels, len, col_of));
    const int top = static_cast<int>(levels.by_len[len].size());  // leading columns are the length-len paths
    std::vector<int> row_of(cols.size(), -1);
    for (int i = 0; i < e.rank; ++i) row_of[e.pivots[i]] = i;

    bool top_killed = true;
    for (int c = 0; c < top && top_killed; ++c) {
      const int r = row_of[c];
      if (r < 0) {
        top_killed = false;
        break;
      }
      for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        if (j != c && !e.reduced(r, j).is_zero()) {
          top_killed = false;
          break;
        }
    }
    if (!top_killed) continue;

    auto alg = std::make_shared<BoundQuiverAlgebra>();
    alg->quiver_ = q;
    alg->relations_ = rels;
    alg->bound_ = len;
    alg->max_len_ = max_len;

    // basis: non-pivot columns among paths shorter than len
    std::vector<int> basis_cols;
    for (int c = top; c < static_cast<int>(cols.size()); ++c)
      if (row_of[c] < 0) basis_cols.push_back(c);
    std::sort(basis_cols.begin(), basis_cols.end(), [&](int a, int b) {
      const Path &pa = cols[a], &pb = cols[b];
      if (pa.is_trivial() && pb.is_trivial()) return pa.source < pb.source;
      return path_less(q, pa, pb);
    });
    std::vector<int> basis_index(cols.size(), -1);
    for (int i = 0; i < static_cast<int>(basis_cols.size()); ++i) {
      basis_index[basis_cols[i]] = i;
      alg->basis_.push_back(cols[basis_cols[i]]);
    }
    const int d = alg->dim();
    for (int v = 0; v < q.vertex_count(); ++v)
      if (!alg->basis_[v].is_trivial() || alg->basis_[v].source != v)
        throw InvalidInput("relations kill a vertex idempotent; ideal is not admissible");

    for (int c = top; c < static_cast<int>(cols.size()); ++c) {
      Vec nf(d);
      if (row_of[c] < 0) {
        nf[basis_index[c]] = 1;
      } else {
        const int r = row_of[c];
        for (int j = top; j < static_cast<int>(cols.size()); ++j)
          if (j != c && !e.reduced(r, j).is_zero()) nf[basis_index[j]] = -e.reduced(r, j);
      }
      alg->nf_.emplace(path_key(cols[c]), std::move(nf));
    }

    alg->table_.assign(static_cast<std::size_t>(d) * d, Vec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Path &a = alg->basis_[i], &b = alg->basis_[j];
        if (a.target != b.source) continue;
        alg->table_[static_cast<std::size_t>(i) * d + j] = alg->normal_form(concat(a, b));
      }

    const int n = q.vertex_count();
    alg->between_.assign(static_cast<std::size_t>(n) * n, {});
    for (int i = 0; i < d; ++i) {
      const Path& p = alg->basis_[i];
      alg->between_[static_cast<std::size_t>(p.source) * n + p.target].push_back(i);
    }
    return alg;
  }
  throw NotFiniteDimensional("nonzero paths survive at length " + std::to_string(max_len));
}

AlgebraPtr idempotent_quotient(const BoundQuiverAlgebra& a, const std::vector<int>& cut) {
  const Quiver& q = a.quiver();
  std::vector<int> new_index(q.vertex_count(), 0);
  for (int v : cut) {
    if (v < 0 || v >= q.vertex_count()) throw InvalidInput("cut vertex out of range");
    new_index[v] = -1;
  }
  int n = 0;
  for (auto& x : new_index)
    if (x == 0) x = n++;

  Quiver out(n);
  std::vector<int> arrow_map(q.arrow_count(), -1);
  for (int i = 0; i < q.arrow_count(); ++i) {
    const Arrow& ar = q.arrow(i);
    if (new_index[ar.source] < 0 || new_index[ar.target] < 0) continue;
    arrow_map[i] = out.add_arrow(ar.name, new_index[ar.source], new_index[ar.target]);
  }
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation nr;
    for (const auto& t : r.terms) {
      bool keep = new_index[t.path.source] >= 0;
      std::vector<int> arrows;
      for (int x : t.path.arrows) {
        if (arrow_map[x] < 0) keep = false;
        arrows.push_back(arrow_map[x]);
      }
      if (keep) nr.terms.push_back({t.coeff, Path::from_arrows(out, std::move(arrows))});
    }
    if (!nr.terms.empty()) rels.push_back(std::move(nr));
  }
  return build_algebra(out, rels, std::max(a.nilpotency_bound() + 1, kDefaultMaxPathLength));
}

AlgebraPtr opposite_algebra(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  Quiver op(q.vertex_count());
  for (const auto& ar : q.arrows()) op.add_arrow(ar.name, ar.target, ar.source);
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation nr;
    for (const auto& t : r.terms) {
      std::vector<int> rev(t.path.arrows.rbegin(), t.path.arrows.rend());
      nr.terms.push_back({t.coeff, Path::from_arrows(op, std::move(rev))});
    }
    rels.push_back(std::move(nr));
  }
  return build_algebra(op, rels, std::max(a.nilpotency_bound() + 1, kDefaultMaxPathLength));
}

AlgebraPtr linear_monomial_algebra(int n, const std::vector<int>& killed) {
  if (n < 1) throw InvalidInput("linear quiver needs at least one vertex");
  Quiver q(n);
  for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i, i - 1);
  std::vector<Relation> rels;
  for (int i : killed) {
    if (i < 1 || i + 1 >= n) throw InvalidInput("no length-2 path a" + std::to_string(i + 1) + ".a" + std::to_string(i));
    // a<i+1>: i+2 -> i+1, a<i>: i+1 -> i; arrow a<j> has index j-1
    rels.push_back(Relation{{{Fp(1), Path::from_arrows(q, {i, i - 1})}}});
  }
  return build_algebra(q, rels);
}

AlgebraPtr generate_Ank(int n, int k) {
  if (n < 2 || k < 2 || k > n)
    throw InvalidInput("A(n,k) needs n >= 2 and 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::vector<int> killed;
  for (int i = 1; i <= k - 2; ++i) killed.push_back(i);
  return linear_monomial_algebra(n, killed);
}

}  // namespace silt

#include "silt/assoc_algebra.hpp"

#include <algorithm>

#include "silt/errors.hpp"

namespace silt {

AssociativeAlgebra::AssociativeAlgebra(int vertex_count, std::vector<Block> blocks, std::vector<std::string> labels,
                                       std::vector<int> idempotents, std::vector<Vec> table)
    : vertex_count_(vertex_count),
      blocks_(std::move(blocks)),
      labels_(std::move(labels)),
      idempotents_(std::move(idempotents)),
      table_(std::move(table)) {
  const auto d = blocks_.size();
  if (labels_.size() != d || table_.size() != d * d || static_cast<int>(idempotents_.size()) != vertex_count_)
    throw InvalidInput("AssociativeAlgebra: inconsistent sizes");
}

Vec AssociativeAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || blocks_[i].target != blocks_[j].source) continue;
      axpy(out, x[i] * y[j], product(i, j));
    }
  }
  return out;
}

std::vector<int> AssociativeAlgebra::block_indices(int s, int t) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (blocks_[i].source == s && blocks_[i].target == t) out.push_back(i);
  return out;
}

void AssociativeAlgebra::validate() const {
  const int d = dim();
  auto unit = [d](int i) {
    Vec v(d);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec& p = product(i, j);
      for (int k = 0; k < d; ++k) {
        if (p[k].is_zero()) continue;
        if (blocks_[i].target != blocks_[j].source || blocks_[k].source != blocks_[i].source ||
            blocks_[k].target != blocks_[j].target)
          throw InvalidInput("product leaves its block");
      }
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (multiply(product(i, j), unit(k)) != multiply(unit(i), product(j, k)))
          throw InvalidInput("multiplication table is not associative");
  Vec one(d);
  for (int v = 0; v < vertex_count_; ++v) one[idempotents_[v]] = 1;
  for (int i = 0; i < d; ++i)
    if (multiply(one, unit(i)) != unit(i) || multiply(unit(i), one) != unit(i))
      throw InvalidInput("vertex idempotents do not sum to the identity");
  for (int u = 0; u < vertex_count_; ++u)
    for (int v = 0; v < vertex_count_; ++v) {
      const Vec& p = product(idempotents_[u], idempotents_[v]);
      if (p != (u == v ? unit(idempotents_[u]) : Vec(d))) throw InvalidInput("vertex idempotents not orthogonal");
    }
}

AssociativeAlgebra as_associative(const BoundQuiverAlgebra& a) {
  std::vector<int> all(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) all[v] = v;
  return corner_algebra(a, all);
}

AssociativeAlgebra corner_algebra(const BoundQuiverAlgebra& a, const std::vector<int>& keep_in) {
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_index(a.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (keep[i] < 0 || keep[i] >= a.vertex_count()) throw InvalidInput("corner vertex out of range");
    new_index[keep[i]] = i;
  }
  std::vector<int> old;  // kept basis indices of A
  for (int i = 0; i < a.dim(); ++i) {
    const Path& p = a.basis_path(i);
    if (new_index[p.source] >= 0 && new_index[p.target] >= 0) old.push_back(i);
  }
  std::vector<int> pos(a.dim(), -1);
  for (int i = 0; i < static_cast<int>(old.size()); ++i) pos[old[i]] = i;

  const int d = static_cast<int>(old.size());
  std::vector<AssociativeAlgebra::Block> blocks;
  std::vector<std::string> labels;
  std::vector<int> idem(keep.size());
  for (int i = 0; i < d; ++i) {
    const Path& p = a.basis_path(old[i]);
    blocks.push_back({new_index[p.source], new_index[p.target]});
    labels.push_back(path_string(a.quiver(), p));
    if (p.is_trivial()) idem[new_index[p.source]] = i;
  }
  std::vector<Vec> table(static_cast<std::size_t>(d) * d, Vec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec& p = a.product(old[i], old[j]);
      Vec& out = table[static_cast<std::size_t>(i) * d + j];
      for (int k = 0; k < a.dim(); ++k)
        if (!p[k].is_zero()) out[pos[k]] = p[k];
    }
  return AssociativeAlgebra(static_cast<int>(keep.size()), std::move(blocks), std::move(labels), std::move(idem),
                            std::move(table));
}

AssociativeAlgebra quotient_by_vertices(const AssociativeAlgebra& b, const std::vector<int>& z) {
  const int n = b.vertex_count(), d = b.dim();
  std::vector<bool> in_z(n, false);
  for (int v : z) {
    if (v < 0 || v >= n) throw InvalidInput("quotient vertex out of range");
    in_z[v] = true;
  }
  std::vector<int> new_index(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!in_z[v]) new_index[v] = m++;

  // ideal generators per block: products x*y with t(x) = s(y) in Z
  std::vector<std::vector<Vec>> gens(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto &bi = b.block(i), &bj = b.block(j);
      if (bi.target != bj.source || !in_z[bi.target]) continue;
      gens[static_cast<std::size_t>(bi.source) * n + bj.target].push_back(b.product(i, j));
    }

  // per kept block: complement basis (idempotent first), then the ideal part
  struct BlockData {
    std::vector<int> idx;    // B-basis indices of the block
    Matrix frame;            // columns: complement reps then ideal basis, in block coordinates
    int complement = 0;
    int offset = 0;          // first new basis index
  };
  std::vector<BlockData> data(static_cast<std::size_t>(n) * n);
  std::vector<AssociativeAlgebra::Block> blocks;
  std::vector<std::string> labels;
  std::vector<Vec> reps;  // representative in B coords for each new basis element
  std::vector<int> idem(m, -1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (in_z[s] || in_z[t]) continue;
      auto& bd = data[static_cast<std::size_t>(s) * n + t];
      bd.idx = b.block_indices(s, t);
      const int k = static_cast<int>(bd.idx.size());
      SpanBuilder ideal(k);
      std::vector<Vec> ideal_basis;
      for (const auto& g : gens[static_cast<std::size_t>(s) * n + t]) {
        Vec local(k);
        for (int a = 0; a < k; ++a) local[a] = g[bd.idx[a]];
        if (ideal.add(local)) ideal_basis.push_back(local);
      }
      // candidates: idempotent first, then the block basis in order
      std::vector<int> order(k);
      for (int a = 0; a < k; ++a) order[a] = a;
      if (s == t) {
        auto it = std::find(bd.idx.begin(), bd.idx.end(), b.idempotent(s));
        std::rotate(order.begin(), order.begin() + (it - bd.idx.begin()), order.begin() + (it - bd.idx.begin()) + 1);
      }
      std::vector<Vec> cols;
      SpanBuilder span = ideal;
      bd.offset = static_cast<int>(reps.size());
      for (int a : order) {
        Vec u(k);
        u[a] = 1;
        if (!span.add(u)) continue;
        cols.push_back(u);
        Vec rep(d);
        rep[bd.idx[a]] = 1;
        if (bd.idx[a] == b.idempotent(s) && s == t) idem[new_index[s]] = static_cast<int>(reps.size());
        reps.push_back(rep);
        blocks.push_back({new_index[s], new_index[t]});
        labels.push_back(b.label(bd.idx[a]));
      }
      bd.complement = static_cast<int>(cols.size());
      cols.insert(cols.end(), ideal_basis.begin(), ideal_basis.end());
      bd.frame = Matrix::from_columns(k, cols);
    }
  for (int v = 0; v < m; ++v)
    if (idem[v] < 0) throw InvalidInput("quotient kills a surviving idempotent");

  const int dq = static_cast<int>(reps.size());
  std::vector<Vec> table(static_cast<std::size_t>(dq) * dq, Vec(dq));
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j < dq; ++j) {
      if (blocks[i].target != blocks[j].source) continue;
      const Vec prod = b.multiply(reps[i], reps[j]);
      int s = -1, t = -1;
      for (int v = 0; v < n; ++v)
        if (new_index[v] == blocks[i].source) s = v;
      for (int v = 0; v < n; ++v)
        if (new_index[v] == blocks[j].target) t = v;
      const auto& bd = data[static_cast<std::size_t>(s) * n + t];
      const int k = static_cast<int>(bd.idx.size());
      Matrix rhs(k, 1);
      for (int a = 0; a < k; ++a) rhs(a, 0) = prod[bd.idx[a]];
      const auto x = solve(bd.frame, rhs);
      if (!x) throw InvalidInput("quotient: product outside its block");
      Vec& out = table[static_cast<std::size_t>(i) * dq + j];
      for (int c = 0; c < bd.complement; ++c) out[bd.offset + c] = (*x)(c, 0);
    }
  return AssociativeAlgebra(m, std::move(blocks), std::move(labels), std::move(idem), std::move(table));
}

}  // namespace silt

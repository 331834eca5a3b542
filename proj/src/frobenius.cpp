#include "heg/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <numeric>

#include "heg/errors.hpp"

namespace heg {

namespace {

size_t power(size_t base, int exp) {
  size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Dense tensor with one slot per named arc, all of dimension dim; data is
// row-major with slot 0 outermost.
struct SlotTensor {
  std::vector<int> slots;
  Vec data;
};

std::vector<size_t> strides(size_t dim, size_t rank) {
  std::vector<size_t> s(rank);
  size_t acc = 1;
  for (size_t i = rank; i-- > 0;) {
    s[i] = acc;
    acc *= dim;
  }
  return s;
}

SlotTensor tensor_product(const Field& field, const SlotTensor& a,
                          const SlotTensor& b) {
  SlotTensor out;
  out.slots = a.slots;
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  out.data.reserve(a.data.size() * b.data.size());
  for (const Rational& x : a.data)
    for (const Rational& y : b.data) out.data.push_back(field.mul(x, y));
  return out;
}

// Contracts slots p1 and p2 (positions, p1 != p2) through the copairing.
SlotTensor contract_pair(const Field& field, const Matrix& copairing,
                         const SlotTensor& t, size_t p1, size_t p2) {
  if (p1 > p2) std::swap(p1, p2);
  const size_t dim = copairing.size();
  const size_t rank = t.slots.size();
  const auto st = strides(dim, rank);

  SlotTensor out;
  for (size_t s = 0; s < rank; ++s)
    if (s != p1 && s != p2) out.slots.push_back(t.slots[s]);
  const size_t out_rank = rank - 2;
  out.data.assign(power(dim, static_cast<int>(out_rank)), field.zero());

  std::vector<size_t> idx(out_rank, 0);
  for (size_t ri = 0; ri < out.data.size(); ++ri) {
    size_t base = 0, pos = 0;
    for (size_t s = 0; s < rank; ++s) {
      if (s == p1 || s == p2) continue;
      base += idx[pos++] * st[s];
    }
    Rational acc = field.zero();
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        if (field.is_zero(copairing[i][j])) continue;
        acc = field.add(acc, field.mul(copairing[i][j],
                                       t.data[base + i * st[p1] + j * st[p2]]));
      }
    out.data[ri] = acc;
    for (size_t s = out_rank; s-- > 0;) {
      if (++idx[s] < dim) break;
      idx[s] = 0;
    }
  }
  return out;
}

// Reorders slots into the given position order.
SlotTensor permute_slots(size_t dim, const SlotTensor& t,
                         const std::vector<size_t>& order) {
  const size_t rank = t.slots.size();
  const auto st = strides(dim, rank);
  SlotTensor out;
  out.slots.reserve(rank);
  for (size_t p : order) out.slots.push_back(t.slots[p]);
  out.data.resize(t.data.size());

  std::vector<size_t> idx(rank, 0);
  for (size_t ri = 0; ri < out.data.size(); ++ri) {
    size_t src = 0;
    for (size_t s = 0; s < rank; ++s) src += idx[s] * st[order[s]];
    out.data[ri] = t.data[src];
    for (size_t s = rank; s-- > 0;) {
      if (++idx[s] < dim) break;
      idx[s] = 0;
    }
  }
  return out;
}

}  // namespace

FrobeniusAlgebra FrobeniusAlgebra::load(AlgebraSpec spec) {
  const Field& F = spec.field;
  const int n = spec.dim;
  if (n <= 0 || static_cast<int>(spec.mul.size()) != n ||
      static_cast<int>(spec.unit.size()) != n ||
      static_cast<int>(spec.trace.size()) != n)
    throw DomainError("PARSE", "algebra spec has inconsistent shapes");
  for (auto& row : spec.mul) {
    if (static_cast<int>(row.size()) != n)
      throw DomainError("PARSE", "algebra spec has inconsistent shapes");
    for (auto& cell : row) {
      if (static_cast<int>(cell.size()) != n)
        throw DomainError("PARSE", "algebra spec has inconsistent shapes");
      for (Rational& x : cell) x = F.add(x, F.zero());  // reduce mod p
    }
  }
  for (Rational& x : spec.unit) x = F.add(x, F.zero());
  for (Rational& x : spec.trace) x = F.add(x, F.zero());

  FrobeniusAlgebra A(std::move(spec));
  const auto& mul = A.spec_.mul;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (mul[i][j] != mul[j][i])
        throw DomainError("NOT_COMMUTATIVE",
                          "basis products e_" + std::to_string(i) + " e_" +
                              std::to_string(j) + " disagree");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          Rational lhs = F.zero(), rhs = F.zero();
          for (int k = 0; k < n; ++k) {
            lhs = F.add(lhs, F.mul(mul[i][j][k], mul[k][l][m]));
            rhs = F.add(rhs, F.mul(mul[j][l][k], mul[i][k][m]));
          }
          if (lhs != rhs)
            throw DomainError("NOT_ASSOCIATIVE", "associativity fails");
        }

  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s) {
      Rational v = F.zero();
      for (int a = 0; a < n; ++a)
        v = F.add(v, F.mul(A.spec_.unit[a], mul[a][i][s]));
      if (v != (s == i ? F.one() : F.zero()))
        throw DomainError("NO_UNIT", "stated unit is not a unit");
    }

  A.pairing_.assign(n, Vec(n, F.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = F.zero();
      for (int k = 0; k < n; ++k)
        v = F.add(v, F.mul(mul[i][j][k], A.spec_.trace[k]));
      A.pairing_[i][j] = v;
    }
  A.copairing_ = invert_matrix(F, A.pairing_);  // throws DEGENERATE_TRACE

  // Comultiplication: Delta(e_k) = sum_{s,j} D_k[s][j] e_s (x) e_j.
  std::vector<Matrix> delta(n, Matrix(n, Vec(n, F.zero())));
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s)
      for (int j = 0; j < n; ++j) {
        Rational v = F.zero();
        for (int i = 0; i < n; ++i)
          v = F.add(v, F.mul(A.copairing_[i][j], mul[k][i][s]));
        delta[k][s][j] = v;
      }

  // Frobenius relations on basis inputs e_a (x) e_b.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < n; ++s)
        for (int j = 0; j < n; ++j) {
          Rational mid = F.zero(), left = F.zero(), right = F.zero();
          for (int k = 0; k < n; ++k)
            mid = F.add(mid, F.mul(mul[a][b][k], delta[k][s][j]));
          for (int i = 0; i < n; ++i)
            left = F.add(left, F.mul(delta[b][i][j], mul[a][i][s]));
          for (int k = 0; k < n; ++k)
            right = F.add(right, F.mul(delta[a][s][k], mul[k][b][j]));
          if (mid != left || mid != right)
            throw DomainError("FROBENIUS_VIOLATION",
                              "derived comultiplication fails the Frobenius "
                              "relations");
        }

  A.handle_.assign(n, Vec(n, F.zero()));
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s) {
      Rational v = F.zero();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          v = F.add(v, F.mul(delta[k][i][j], mul[i][j][s]));
      A.handle_[s][k] = v;
    }

  return A;
}

Vec FrobeniusAlgebra::basis(int i) const {
  Vec v(dim(), field().zero());
  v[i] = field().one();
  return v;
}

Vec FrobeniusAlgebra::multiply(const Vec& a, const Vec& b) const {
  const Field& F = field();
  Vec out(dim(), F.zero());
  for (int i = 0; i < dim(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (F.is_zero(b[j])) continue;
      const Rational c = F.mul(a[i], b[j]);
      for (int k = 0; k < dim(); ++k)
        out[k] = F.add(out[k], F.mul(c, spec_.mul[i][j][k]));
    }
  }
  return out;
}

Rational FrobeniusAlgebra::trace(const Vec& a) const {
  const Field& F = field();
  Rational out = F.zero();
  for (int i = 0; i < dim(); ++i)
    out = F.add(out, F.mul(a[i], spec_.trace[i]));
  return out;
}

Vec FrobeniusAlgebra::handle(const Vec& a) const {
  const Field& F = field();
  Vec out(dim(), F.zero());
  for (int s = 0; s < dim(); ++s)
    for (int k = 0; k < dim(); ++k)
      out[s] = F.add(out[s], F.mul(handle_[s][k], a[k]));
  return out;
}

Vec FrobeniusAlgebra::handle_power(int g, Vec a) const {
  for (int i = 0; i < g; ++i) a = handle(a);
  return a;
}

Rational FrobeniusAlgebra::evaluate_closed(int g) const {
  return trace(handle_power(g, spec_.unit));
}

const Vec& FrobeniusAlgebra::genus_tensor(int g, int k) const {
  const auto key = std::make_pair(g, k);
  auto it = genus_cache_.find(key);
  if (it != genus_cache_.end()) return it->second;

  Vec out;
  out.reserve(power(dim(), k));
  std::function<void(int, const Vec&)> rec = [&](int depth, const Vec& prod) {
    if (depth == k) {
      out.push_back(trace(handle_power(g, prod)));
      return;
    }
    for (int i = 0; i < dim(); ++i) rec(depth + 1, multiply(prod, basis(i)));
  };
  rec(0, spec_.unit);
  return genus_cache_.emplace(key, std::move(out)).first->second;
}

Vec evaluate_graph_open(const FrobeniusAlgebra& algebra,
                        const GradedGraph& gg) {
  const Graph& g = gg.graph;
  const Field& F = algebra.field();
  const size_t n = static_cast<size_t>(algebra.dim());
  if (g.vertex_count() == 0)
    throw DomainError("EMPTY", "cannot evaluate a vertexless dual graph");
  if (static_cast<int>(gg.labels.size()) != g.vertex_count())
    throw DomainError("ARITY_MISMATCH", "label count differs from vertices");

  std::list<SlotTensor> parts;
  for (int v = 0; v < g.vertex_count(); ++v)
    parts.push_back(
        {g.arcs_at(v), algebra.genus_tensor(gg.labels[v], g.valence(v))});

  auto locate = [&](int arc) {
    for (auto it = parts.begin(); it != parts.end(); ++it) {
      auto pos = std::find(it->slots.begin(), it->slots.end(), arc);
      if (pos != it->slots.end())
        return std::make_pair(it, static_cast<size_t>(pos - it->slots.begin()));
    }
    throw DomainError("BAD_INDEX", "arc missing from contraction state");
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge_kind(e) != EdgeKind::Internal) continue;
    auto [it1, p1] = locate(2 * e);
    auto [it2, p2] = locate(2 * e + 1);
    if (it1 == it2) {
      *it1 = contract_pair(F, algebra.copairing(), *it1, p1, p2);
    } else {
      SlotTensor merged = tensor_product(F, *it1, *it2);
      const size_t shifted = it1->slots.size() + p2;
      parts.erase(it2);
      *it1 = contract_pair(F, algebra.copairing(), merged, p1, shifted);
    }
  }
  // Connectivity guarantees the internal edges tie everything together.
  if (parts.size() != 1)
    throw DomainError("DISCONNECTED", "contraction left multiple components");

  SlotTensor t = std::move(parts.front());
  std::vector<size_t> order(t.slots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return t.slots[a] / 2 < t.slots[b] / 2; });
  return permute_slots(n, t, order).data;
}

Rational evaluate_graph(const FrobeniusAlgebra& algebra, const GradedGraph& gg,
                        const std::vector<Vec>& leg_inputs) {
  const Field& F = algebra.field();
  const size_t n = static_cast<size_t>(algebra.dim());
  if (static_cast<int>(leg_inputs.size()) != gg.graph.leg_count())
    throw DomainError("ARITY_MISMATCH",
                      "expected " + std::to_string(gg.graph.leg_count()) +
                          " leg inputs, got " +
                          std::to_string(leg_inputs.size()));
  for (const Vec& in : leg_inputs)
    if (in.size() != n)
      throw DomainError("ARITY_MISMATCH", "leg input has wrong dimension");

  Vec data = evaluate_graph_open(algebra, gg);
  for (const Vec& in : leg_inputs) {
    const size_t rest = data.size() / n;
    Vec next(rest, F.zero());
    for (size_t i = 0; i < n; ++i) {
      if (F.is_zero(in[i])) continue;
      for (size_t r = 0; r < rest; ++r)
        next[r] = F.add(next[r], F.mul(in[i], data[i * rest + r]));
    }
    data = std::move(next);
  }
  return data[0];
}

InvarianceReport invariance_check(const FrobeniusAlgebra& algebra,
                                  int total_genus, int legs, int max_edges) {
  InvarianceReport report;
  const Vec& reference = algebra.genus_tensor(total_genus, legs);
  for (const GradedGraph& gg :
       enumerate_graded_graphs(total_genus, legs, false, max_edges)) {
    ++report.graphs_checked;
    const Vec actual = evaluate_graph_open(algebra, gg);
    if (actual != reference && report.ok) {
      report.ok = false;
      report.first_discrepancy =
          "graph with " + std::to_string(gg.graph.vertex_count()) +
          " vertices and " + std::to_string(gg.graph.edge_count()) +
          " edges deviates from the genus tensor";
    }
  }
  return report;
}

AlgebraSpec truncated_polynomial_spec(const Field& field, int dim) {
  AlgebraSpec spec;
  spec.field = field;
  spec.dim = dim;
  spec.mul.assign(dim, std::vector<Vec>(dim, Vec(dim, field.zero())));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i + j < dim) spec.mul[i][j][i + j] = field.one();
  spec.unit.assign(dim, field.zero());
  spec.unit[0] = field.one();
  spec.trace.assign(dim, field.zero());
  spec.trace[dim - 1] = field.one();
  return spec;
}

AlgebraSpec group_algebra_c2_spec(const Field& field) {
  AlgebraSpec spec;
  spec.field = field;
  spec.dim = 2;
  spec.mul.assign(2, std::vector<Vec>(2, Vec(2, field.zero())));
  spec.mul[0][0][0] = field.one();
  spec.mul[0][1][1] = field.one();
  spec.mul[1][0][1] = field.one();
  spec.mul[1][1][0] = field.one();
  spec.unit = {field.one(), field.zero()};
  spec.trace = {field.one(), field.zero()};
  return spec;
}

}  // namespace heg

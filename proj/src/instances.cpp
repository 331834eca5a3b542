#include "heg/instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "heg/errors.hpp"
#include "heg/hom.hpp"

namespace heg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const std::string& part : split(s, ','))
    out.push_back(std::stoi(part));
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SetPresheaf make_terminal_presheaf() {
  SetPresheaf P;
  P.name = "terminal";
  P.elements = [](const Graph&, size_t) {
    return std::vector<std::string>{"*"};
  };
  P.act = [](const GraphMap&, const std::string&) { return std::string("*"); };
  return P;
}

SetPresheaf make_orientation_presheaf() {
  SetPresheaf P;
  P.name = "orientation";
  P.elements = [](const Graph& g, size_t limit) {
    const int E = g.edge_count();
    if (E >= 60 || (size_t{1} << E) > limit)
      throw DomainError("BOUND_EXCEEDED", "too many orientations");
    std::vector<std::string> out;
    for (size_t mask = 0; mask < (size_t{1} << E); ++mask) {
      std::string s(E, '+');
      for (int e = 0; e < E; ++e)
        if (mask >> e & 1) s[e] = '-';
      out.push_back(s);
    }
    return out;
  };
  P.act = [](const GraphMap& m, const std::string& s) {
    std::string out(m.target.edge_count(), '+');
    for (int e = 0; e < m.target.edge_count(); ++e) {
      const int a = m.arc_map[2 * e];
      const char c = s[a / 2];
      out[e] = (a % 2 == 0) ? c : (c == '+' ? '-' : '+');
    }
    return out;
  };
  return P;
}

SetPresheaf make_grading_presheaf(int label_bound) {
  SetPresheaf P;
  P.name = "grading:" + std::to_string(label_bound);
  P.elements = [label_bound](const Graph& g, size_t limit) {
    size_t count = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      count *= static_cast<size_t>(label_bound) + 1;
      if (count > limit)
        throw DomainError("BOUND_EXCEEDED", "too many labellings");
    }
    std::vector<std::string> out;
    std::vector<int> labels(g.vertex_count(), 0);
    while (true) {
      out.push_back(join_ints(labels));
      int v = g.vertex_count() - 1;
      while (v >= 0 && labels[v] == label_bound) labels[v--] = 0;
      if (v < 0) return out;
      ++labels[v];
    }
  };
  P.act = [label_bound](const GraphMap& m, const std::string& s) {
    const std::vector<int> labels = parse_ints(s);
    std::vector<int> out(m.target.vertex_count(), 0);
    for (int w = 0; w < m.target.vertex_count(); ++w) {
      FiberGraph fib = fiber_over(m, w);
      int l = fib.betti_number();
      for (int v : fib.vertices) l += labels[v];
      if (l > label_bound)
        throw DomainError("LABEL_OVERFLOW",
                          "pushforward label exceeds the bound");
      out[w] = l;
    }
    return join_ints(out);
  };
  return P;
}

SetPresheaf make_monoid_presheaf(const MonoidTable& table) {
  const int k = table.size;
  if (k <= 0 || static_cast<int>(table.op.size()) != k || table.unit < 0 ||
      table.unit >= k)
    throw DomainError("BAD_MONOID", "malformed monoid table");
  for (const auto& row : table.op) {
    if (static_cast<int>(row.size()) != k)
      throw DomainError("BAD_MONOID", "malformed monoid table");
    for (int x : row)
      if (x < 0 || x >= k)
        throw DomainError("BAD_MONOID", "entry out of range");
  }
  for (int i = 0; i < k; ++i) {
    if (table.op[table.unit][i] != i)
      throw DomainError("BAD_MONOID", "stated unit is not a unit");
    for (int j = 0; j < k; ++j) {
      if (table.op[i][j] != table.op[j][i])
        throw DomainError("BAD_MONOID", "not commutative");
      for (int l = 0; l < k; ++l)
        if (table.op[table.op[i][j]][l] != table.op[i][table.op[j][l]])
          throw DomainError("BAD_MONOID", "not associative");
    }
  }

  SetPresheaf P;
  P.name = "monoid";
  P.elements = [k](const Graph& g, size_t limit) {
    size_t count = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      count *= static_cast<size_t>(k);
      if (count > limit)
        throw DomainError("BOUND_EXCEEDED", "too many labellings");
    }
    std::vector<std::string> out;
    std::vector<int> labels(g.vertex_count(), 0);
    while (true) {
      out.push_back(join_ints(labels));
      int v = g.vertex_count() - 1;
      while (v >= 0 && labels[v] == k - 1) labels[v--] = 0;
      if (v < 0) return out;
      ++labels[v];
    }
  };
  P.act = [table](const GraphMap& m, const std::string& s) {
    const std::vector<int> labels = parse_ints(s);
    std::vector<int> out(m.target.vertex_count(), table.unit);
    for (int w = 0; w < m.target.vertex_count(); ++w)
      for (int v : fiber_over(m, w).vertices)
        out[w] = table.op[out[w]][labels[v]];
    return join_ints(out);
  };
  return P;
}

namespace {

// Dense tensor over F_p with named slots of individual dimensions.
struct TensorFp {
  std::vector<int> slots;
  std::vector<int> dims;
  std::vector<int> data;  // row-major, slot 0 outermost
};

size_t tensor_size(const std::vector<int>& dims) {
  size_t s = 1;
  for (int d : dims) s *= static_cast<size_t>(d);
  return s;
}

std::vector<size_t> tensor_strides(const std::vector<int>& dims) {
  std::vector<size_t> st(dims.size());
  size_t acc = 1;
  for (size_t i = dims.size(); i-- > 0;) {
    st[i] = acc;
    acc *= static_cast<size_t>(dims[i]);
  }
  return st;
}

TensorFp tensor_product_fp(long p, const TensorFp& a, const TensorFp& b) {
  TensorFp out;
  out.slots = a.slots;
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.data.reserve(a.data.size() * b.data.size());
  for (int x : a.data)
    for (int y : b.data)
      out.data.push_back(static_cast<int>(
          (static_cast<long long>(x) * y) % p));
  return out;
}

// Contracts slot positions p1 and p2 through the matrix M (dims equal).
TensorFp contract_pair_fp(long p, const std::vector<std::vector<int>>& M,
                          const TensorFp& t, size_t p1, size_t p2) {
  if (p1 > p2) std::swap(p1, p2);
  const size_t rank = t.slots.size();
  const auto st = tensor_strides(t.dims);
  const int d = t.dims[p1];

  TensorFp out;
  for (size_t s = 0; s < rank; ++s)
    if (s != p1 && s != p2) {
      out.slots.push_back(t.slots[s]);
      out.dims.push_back(t.dims[s]);
    }
  out.data.assign(tensor_size(out.dims), 0);

  std::vector<int> idx(out.dims.size(), 0);
  for (size_t ri = 0; ri < out.data.size(); ++ri) {
    size_t base = 0, pos = 0;
    for (size_t s = 0; s < rank; ++s) {
      if (s == p1 || s == p2) continue;
      base += static_cast<size_t>(idx[pos++]) * st[s];
    }
    long long acc = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        acc += static_cast<long long>(M[i][j]) *
               t.data[base + i * st[p1] + j * st[p2]] % p;
    out.data[ri] = static_cast<int>(acc % p);
    for (size_t s = out.dims.size(); s-- > 0;) {
      if (++idx[s] < out.dims[s]) break;
      idx[s] = 0;
    }
  }
  return out;
}

// Reorders slots into the given position order.
TensorFp permute_fp(const TensorFp& t, const std::vector<size_t>& order) {
  const size_t rank = t.slots.size();
  const auto st = tensor_strides(t.dims);
  TensorFp out;
  for (size_t pp : order) {
    out.slots.push_back(t.slots[pp]);
    out.dims.push_back(t.dims[pp]);
  }
  out.data.resize(t.data.size());
  std::vector<int> idx(rank, 0);
  for (size_t ri = 0; ri < out.data.size(); ++ri) {
    size_t src = 0;
    for (size_t s = 0; s < rank; ++s)
      src += static_cast<size_t>(idx[s]) * st[order[s]];
    out.data[ri] = t.data[src];
    for (size_t s = rank; s-- > 0;) {
      if (++idx[s] < out.dims[s]) break;
      idx[s] = 0;
    }
  }
  return out;
}

std::vector<std::vector<int>> invert_mod_p(
    long p, std::vector<std::vector<int>> m) {
  const int n = static_cast<int>(m.size());
  auto modpow = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] % p == 0) ++pivot;
    if (pivot == n) throw DomainError("BAD_FORM", "form is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const long long scale = modpow(m[col][col], p - 2);
    for (int j = 0; j < n; ++j) {
      m[col][j] = static_cast<int>(m[col][j] * scale % p);
      inv[col][j] = static_cast<int>(inv[col][j] * scale % p);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const long long f = m[row][col];
      for (int j = 0; j < n; ++j) {
        m[row][j] = static_cast<int>(((m[row][j] - f * m[col][j]) % p + p) % p);
        inv[row][j] =
            static_cast<int>(((inv[row][j] - f * inv[col][j]) % p + p) % p);
      }
    }
  }
  return inv;
}

// Parsed linear-presheaf element: one colour index per edge, one dense
// tensor (digit vector) per vertex over its incident arcs in ascending
// order.
struct LinearElement {
  std::vector<int> colours;
  std::vector<std::vector<int>> tensors;
};

LinearElement parse_linear(const Graph& g, const std::string& s) {
  std::vector<std::string> parts = split(s, '|');
  LinearElement el;
  el.colours = parse_ints(parts[0]);
  for (int v = 0; v < g.vertex_count(); ++v)
    el.tensors.push_back(parse_ints(parts[v + 1]));
  return el;
}

std::string serialize_linear(const LinearElement& el) {
  std::string out = join_ints(el.colours);
  for (const auto& t : el.tensors) out += "|" + join_ints(t);
  return out;
}

}  // namespace

SetPresheaf make_linear_presheaf(long p, std::vector<LinearColour> colours) {
  if (p < 2) throw DomainError("BAD_FORM", "characteristic must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("BAD_FORM", "characteristic not prime");
  if (colours.empty()) throw DomainError("BAD_FORM", "no colours given");
  std::vector<std::vector<std::vector<int>>> copairings;
  for (auto& c : colours) {
    if (c.dim <= 0 || static_cast<int>(c.form.size()) != c.dim)
      throw DomainError("BAD_FORM", "malformed form");
    for (auto& row : c.form) {
      if (static_cast<int>(row.size()) != c.dim)
        throw DomainError("BAD_FORM", "malformed form");
      for (int& x : row) x = static_cast<int>(((x % p) + p) % p);
    }
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < i; ++j)
        if (c.form[i][j] != c.form[j][i])
          throw DomainError("BAD_FORM", "form is not symmetric");
    copairings.push_back(invert_mod_p(p, c.form));
  }

  const auto colour_of_arc = [](const std::vector<int>& edge_colours, int arc) {
    return edge_colours[arc / 2];
  };
  const auto slot_dims = [colours, colour_of_arc](
                             const Graph& g,
                             const std::vector<int>& edge_colours, int v) {
    std::vector<int> dims;
    for (int a : g.arcs_at(v))
      dims.push_back(colours[colour_of_arc(edge_colours, a)].dim);
    return dims;
  };

  SetPresheaf P;
  P.name = "linear";
  P.elements = [p, colours, slot_dims](const Graph& g, size_t limit) {
    std::vector<std::string> out;
    std::vector<int> edge_colours(g.edge_count(), 0);
    while (true) {
      // Digit count for this colouring.
      size_t digits = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        digits += tensor_size(slot_dims(g, edge_colours, v));
      size_t count = 1;
      for (size_t i = 0; i < digits; ++i) {
        count *= static_cast<size_t>(p);
        if (out.size() + count > limit)
          throw DomainError("BOUND_EXCEEDED", "too many tensors");
      }
      if (out.size() + count > limit)
        throw DomainError("BOUND_EXCEEDED", "too many tensors");

      LinearElement el;
      el.colours = edge_colours;
      for (int v = 0; v < g.vertex_count(); ++v)
        el.tensors.emplace_back(tensor_size(slot_dims(g, edge_colours, v)), 0);
      std::function<void(size_t)> gen = [&](size_t v) {
        if (v == el.tensors.size()) {
          out.push_back(serialize_linear(el));
          return;
        }
        std::function<void(size_t)> digits_rec = [&](size_t i) {
          if (i == el.tensors[v].size()) {
            gen(v + 1);
            return;
          }
          for (int d = 0; d < p; ++d) {
            el.tensors[v][i] = d;
            digits_rec(i + 1);
          }
        };
        digits_rec(0);
      };
      gen(0);

      int e = g.edge_count() - 1;
      while (e >= 0 &&
             edge_colours[e] == static_cast<int>(colours.size()) - 1)
        edge_colours[e--] = 0;
      if (e < 0) return out;
      ++edge_colours[e];
    }
  };

  P.act = [p, colours, copairings, slot_dims,
           colour_of_arc](const GraphMap& m, const std::string& s) {
    LinearElement el = parse_linear(m.source, s);
    auto [inert, active] = factorize(m);

    // Inert part: transport colours and permute the retained tensors.
    const Graph& mid = inert.target;
    LinearElement mid_el;
    mid_el.colours.resize(mid.edge_count());
    for (int e = 0; e < mid.edge_count(); ++e)
      mid_el.colours[e] = el.colours[inert.arc_map[2 * e] / 2];
    for (int w = 0; w < mid.vertex_count(); ++w) {
      int v = -1;
      for (int u = 0; u < m.source.vertex_count(); ++u)
        if (inert.vertex_map[u] == w) v = u;
      const std::vector<int> src_arcs = m.source.arcs_at(v);
      TensorFp t{src_arcs, slot_dims(m.source, el.colours, v), el.tensors[v]};
      // target slot order: positions of the arc images among v's arcs
      std::vector<size_t> order;
      for (int b : mid.arcs_at(w)) {
        const int a = inert.arc_map[b];
        order.push_back(std::find(src_arcs.begin(), src_arcs.end(), a) -
                        src_arcs.begin());
      }
      mid_el.tensors.push_back(permute_fp(t, order).data);
    }

    // Active part: contract collapsed edges through the forms, insert
    // copairings at subdivision vertices.
    const Graph& dst = active.target;
    LinearElement out;
    out.colours.resize(dst.edge_count());
    for (int e = 0; e < dst.edge_count(); ++e)
      out.colours[e] = mid_el.colours[active.arc_map[2 * e] / 2];
    for (int w = 0; w < dst.vertex_count(); ++w) {
      FiberGraph fib = fiber_over(active, w);
      if (fib.vertices.empty()) {
        // bivalent subdivision vertex: the copairing of the edge's colour
        const int c = out.colours[dst.arcs_at(w)[0] / 2];
        const auto& inv = copairings[c];
        std::vector<int> data;
        for (int i = 0; i < colours[c].dim; ++i)
          for (int j = 0; j < colours[c].dim; ++j) data.push_back(inv[i][j]);
        out.tensors.push_back(data);
        continue;
      }
      std::vector<TensorFp> parts;
      for (int v : fib.vertices)
        parts.push_back({mid.arcs_at(v), slot_dims(mid, mid_el.colours, v),
                         mid_el.tensors[v]});
      auto locate = [&](int arc) {
        for (size_t i = 0; i < parts.size(); ++i) {
          auto pos = std::find(parts[i].slots.begin(), parts[i].slots.end(),
                               arc);
          if (pos != parts[i].slots.end())
            return std::make_pair(i, static_cast<size_t>(
                                         pos - parts[i].slots.begin()));
        }
        throw DomainError("BAD_INDEX", "arc missing from contraction state");
      };
      for (int e : fib.collapsed_edges) {
        auto [i1, p1] = locate(2 * e);
        auto [i2, p2] = locate(2 * e + 1);
        const auto& form = colours[mid_el.colours[e]].form;
        if (i1 == i2) {
          parts[i1] = contract_pair_fp(p, form, parts[i1], p1, p2);
        } else {
          TensorFp merged = tensor_product_fp(p, parts[i1], parts[i2]);
          const size_t shifted = parts[i1].slots.size() + p2;
          parts[i1] = contract_pair_fp(p, form, merged, p1, shifted);
          parts.erase(parts.begin() + static_cast<long>(i2));
        }
      }
      // Fibers are connected, so one tensor remains; its slots match the
      // target arcs through the arc map.
      TensorFp t = parts.size() == 1
                       ? parts[0]
                       : throw DomainError("FIBER_DISCONNECTED",
                                           "fiber failed to contract");
      std::vector<size_t> order;
      for (int b : dst.arcs_at(w)) {
        const int x = active.arc_map[b];
        order.push_back(std::find(t.slots.begin(), t.slots.end(), x) -
                        t.slots.begin());
      }
      out.tensors.push_back(permute_fp(t, order).data);
    }
    return serialize_linear(out);
  };
  return P;
}

}  // namespace heg

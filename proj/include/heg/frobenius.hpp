#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heg/field.hpp"
#include "heg/graded.hpp"

namespace heg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

// Structure constants of a candidate algebra: e_i * e_j = sum_k mul[i][j][k] e_k.
struct AlgebraSpec {
  Field field = Field::rationals();
  int dim = 0;
  std::vector<std::vector<Vec>> mul;
  Vec unit;
  Vec trace;
};

// A commutative Frobenius algebra with exact scalars. Construction checks
// associativity, commutativity, unitality, non-degeneracy of the trace
// pairing and the Frobenius relations for the derived comultiplication.
class FrobeniusAlgebra {
public:
  // Throws DomainError with code NOT_ASSOCIATIVE, NOT_COMMUTATIVE, NO_UNIT,
  // DEGENERATE_TRACE, FROBENIUS_VIOLATION or PARSE (malformed shapes).
  static FrobeniusAlgebra load(AlgebraSpec spec);

  const Field& field() const { return spec_.field; }
  int dim() const { return spec_.dim; }
  const AlgebraSpec& spec() const { return spec_; }

  Vec basis(int i) const;
  const Vec& unit() const { return spec_.unit; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Rational trace(const Vec& a) const;

  const Matrix& pairing() const { return pairing_; }     // G[i][j] = tau(e_i e_j)
  const Matrix& copairing() const { return copairing_; } // G^{-1}

  // The handle operator H = multiplication after comultiplication.
  Vec handle(const Vec& a) const;
  Vec handle_power(int g, Vec a) const;

  // tau(H^g(1)): the invariant of the closed genus-g surface.
  Rational evaluate_closed(int g) const;

  // Dense row-major tensor of tau(H^g(e_{i_1} ... e_{i_k})) over all basis
  // multi-indices; size dim^k. Cached.
  const Vec& genus_tensor(int g, int k) const;

private:
  explicit FrobeniusAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {}

  AlgebraSpec spec_;
  Matrix pairing_;
  Matrix copairing_;
  Matrix handle_;  // handle(a)[s] = sum_k handle_[s][k] a[k]
  mutable std::map<std::pair<int, int>, Vec> genus_cache_;
};

// Full tensor-network contraction of a genus-labelled dual graph: vertex v
// contributes genus_tensor(label(v), valence(v)); internal edges and loops
// contract through the copairing; legs consume the inputs in edge-index
// order. Throws ARITY_MISMATCH on a wrong input count.
Rational evaluate_graph(const FrobeniusAlgebra& algebra, const GradedGraph& gg,
                        const std::vector<Vec>& leg_inputs);

// Same contraction with the legs left open: a dense tensor of size
// dim^legs, slots ordered by leg edge index.
Vec evaluate_graph_open(const FrobeniusAlgebra& algebra, const GradedGraph& gg);

struct InvarianceReport {
  int graphs_checked = 0;
  bool ok = true;
  std::string first_discrepancy;
};

// Checks that every graded graph with the stated total genus, leg count and
// edge bound evaluates (on all basis inputs) to genus_tensor(total, legs):
// the gluing-invariance property of the surface invariant.
InvarianceReport invariance_check(const FrobeniusAlgebra& algebra,
                                  int total_genus, int legs, int max_edges);

// Fixture algebras.
// k[x]/x^dim with the trace picking out the top coefficient.
AlgebraSpec truncated_polynomial_spec(const Field& field, int dim);
// The group algebra k[C2] with the trace picking out the unit coefficient.
AlgebraSpec group_algebra_c2_spec(const Field& field);

}  // namespace heg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "heg/errors.hpp"
#include "heg/frobenius.hpp"
#include "heg/graded.hpp"

using namespace heg;

namespace {

FrobeniusAlgebra dual_numbers() {
  return FrobeniusAlgebra::load(
      truncated_polynomial_spec(Field::rationals(), 2));
}

std::vector<FrobeniusAlgebra> fixture_algebras() {
  return {
      dual_numbers(),
      FrobeniusAlgebra::load(truncated_polynomial_spec(Field::rationals(), 3)),
      FrobeniusAlgebra::load(group_algebra_c2_spec(Field::rationals())),
      FrobeniusAlgebra::load(group_algebra_c2_spec(Field::prime(3))),
  };
}

// Independent handle oracle: H(a) = sum_ij (G^-1)_ij e_i a e_j.
Vec handle_oracle(const FrobeniusAlgebra& A, const Vec& a) {
  const Field& F = A.field();
  Vec out(A.dim(), F.zero());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Vec term = A.multiply(A.multiply(A.basis(i), a), A.basis(j));
      for (int s = 0; s < A.dim(); ++s)
        out[s] = F.add(out[s], F.mul(A.copairing()[i][j], term[s]));
    }
  return out;
}

// Random edge relabelling (order and arc flips); evaluation must not care.
GradedGraph shuffle_edges(const GradedGraph& gg, std::mt19937& rng) {
  const Graph& g = gg.graph;
  std::vector<int> eperm(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) eperm[i] = i;
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::vector<int> inc(g.arc_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int src = eperm[e];
    const bool flip = rng() % 2 == 0;
    inc[2 * e] = g.incidence(2 * src + (flip ? 1 : 0));
    inc[2 * e + 1] = g.incidence(2 * src + (flip ? 0 : 1));
  }
  return {Graph::make(g.vertex_count(), inc), gg.labels};
}

}  // namespace

TEST_CASE("load derives the expected pairing matrices") {
  FrobeniusAlgebra A = dual_numbers();
  CHECK(A.pairing() == Matrix{{0, 1}, {1, 0}});
  CHECK(A.copairing() == Matrix{{0, 1}, {1, 0}});

  FrobeniusAlgebra C = FrobeniusAlgebra::load(
      group_algebra_c2_spec(Field::rationals()));
  CHECK(C.pairing() == Matrix{{1, 0}, {0, 1}});
}

TEST_CASE("load rejects broken structures with stable codes") {
  AlgebraSpec degenerate = truncated_polynomial_spec(Field::rationals(), 2);
  degenerate.trace = {1, 0};  // tau(1)=1, tau(x)=0: G singular
  CHECK_THROWS_WITH_AS(FrobeniusAlgebra::load(degenerate),
                       doctest::Contains("DEGENERATE_TRACE"), DomainError);

  AlgebraSpec noncomm = group_algebra_c2_spec(Field::rationals());
  noncomm.mul[0][1][1] = 2;
  CHECK_THROWS_WITH_AS(FrobeniusAlgebra::load(noncomm),
                       doctest::Contains("NOT_COMMUTATIVE"), DomainError);

  AlgebraSpec nonassoc = truncated_polynomial_spec(Field::rationals(), 3);
  nonassoc.mul[1][1] = {1, 0, 0};  // x*x = 1 breaks associativity
  nonassoc.mul[2][2] = {0, 0, 1};  // keep it commutative and invertible
  CHECK_THROWS_AS(FrobeniusAlgebra::load(nonassoc), DomainError);

  AlgebraSpec nounit = group_algebra_c2_spec(Field::rationals());
  nounit.unit = {0, 1};
  CHECK_THROWS_WITH_AS(FrobeniusAlgebra::load(nounit),
                       doctest::Contains("NO_UNIT"), DomainError);
}

TEST_CASE("handle operator on the dual numbers") {
  FrobeniusAlgebra A = dual_numbers();
  CHECK(A.handle(A.basis(0)) == Vec{0, 2});  // H(1) = 2x
  CHECK(A.handle_power(2, A.basis(0)) == Vec{0, 0});
}

TEST_CASE("handle of the C2 group algebra is twice the identity") {
  FrobeniusAlgebra C = FrobeniusAlgebra::load(
      group_algebra_c2_spec(Field::rationals()));
  CHECK(C.handle(C.basis(0)) == Vec{2, 0});
  CHECK(C.handle(C.basis(1)) == Vec{0, 2});
}

TEST_CASE("handle matches the sandwich oracle on all fixtures") {
  for (const FrobeniusAlgebra& A : fixture_algebras())
    for (int i = 0; i < A.dim(); ++i)
      CHECK(A.handle(A.basis(i)) == handle_oracle(A, A.basis(i)));
}

TEST_CASE("closed surface invariants") {
  FrobeniusAlgebra A = dual_numbers();
  CHECK(A.evaluate_closed(0) == 0);
  FrobeniusAlgebra C = FrobeniusAlgebra::load(
      group_algebra_c2_spec(Field::rationals()));
  CHECK(C.evaluate_closed(2) == 4);

  for (const FrobeniusAlgebra& X : fixture_algebras())
    CHECK(X.evaluate_closed(1) == X.field().from_int(X.dim()));
}

TEST_CASE("genus tensor spot values and symmetry") {
  FrobeniusAlgebra A = dual_numbers();
  const Vec& g02 = A.genus_tensor(0, 2);
  CHECK(g02 == Vec{0, 1, 1, 0});  // the pairing G

  const Vec& g03 = A.genus_tensor(0, 3);
  CHECK(g03[1 * 4 + 1 * 2 + 1] == 0);  // (x,x,x)
  CHECK(g03[0 * 4 + 0 * 2 + 1] == 1);  // (1,1,x)

  CHECK(A.genus_tensor(1, 1) == Vec{2, 0});  // tau(H(1)) = 2, tau(H(x)) = 0

  for (const FrobeniusAlgebra& X : fixture_algebras()) {
    const int n = X.dim();
    const Vec& t = X.genus_tensor(1, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(t[i * n + j] == t[j * n + i]);
  }
}

TEST_CASE("evaluate_graph agrees with closed evaluation") {
  FrobeniusAlgebra A = dual_numbers();
  CHECK(evaluate_graph(A, {make_theta(), {0, 0}}, {}) == A.evaluate_closed(2));
  CHECK(evaluate_graph(A, {make_loops(1), {0}}, {}) == A.evaluate_closed(1));
  FrobeniusAlgebra C = FrobeniusAlgebra::load(
      group_algebra_c2_spec(Field::rationals()));
  CHECK(evaluate_graph(C, {make_loops(2), {0}}, {}) == C.evaluate_closed(2));
}

TEST_CASE("single corolla reproduces the genus tensor") {
  for (const FrobeniusAlgebra& A : fixture_algebras())
    for (int g = 0; g <= 2; ++g)
      for (int k = 0; k <= 3; ++k)
        CHECK(evaluate_graph_open(A, {make_corolla(k), {g}}) ==
              A.genus_tensor(g, k));
}

TEST_CASE("evaluate_graph input handling") {
  FrobeniusAlgebra A = dual_numbers();
  CHECK_THROWS_WITH_AS(evaluate_graph(A, {make_corolla(2), {0}}, {}),
                       doctest::Contains("ARITY_MISMATCH"), DomainError);
  // pair of pants with a cap: tau(a*b) on legs
  GradedGraph pants{make_corolla(2), {0}};
  CHECK(evaluate_graph(A, pants, {A.basis(0), A.basis(1)}) == 1);
  CHECK(evaluate_graph(A, pants, {A.basis(1), A.basis(1)}) == 0);
}

TEST_CASE("contracting a loop increments the genus label") {
  FrobeniusAlgebra B = FrobeniusAlgebra::load(
      truncated_polynomial_spec(Field::rationals(), 3));
  CHECK(evaluate_graph_open(B, {make_loops(2), {1}}) ==
        evaluate_graph_open(B, {make_corolla(0), {3}}));
  FrobeniusAlgebra A = dual_numbers();
  CHECK(evaluate_graph_open(A, {make_loops(1), {1}}) ==
        evaluate_graph_open(A, {make_corolla(0), {2}}));
}

TEST_CASE("evaluation is independent of edge labelling") {
  std::mt19937 rng(77);
  std::vector<GradedGraph> cases = {
      {make_theta(), {1, 0}},
      {make_loops(2), {0}},
      {make_linear(3), {0, 1, 0}},
  };
  for (const FrobeniusAlgebra& A : fixture_algebras())
    for (const GradedGraph& gg : cases) {
      const Vec reference = evaluate_graph_open(A, gg);
      for (int trial = 0; trial < 5; ++trial)
        CHECK(evaluate_graph_open(A, shuffle_edges(gg, rng)) == reference);
    }
}

TEST_CASE("gluing invariance on a small window") {
  FrobeniusAlgebra A = dual_numbers();
  InvarianceReport r = invariance_check(A, 2, 0, 3);
  CHECK(r.ok);
  CHECK(r.graphs_checked > 1);

  FrobeniusAlgebra C = FrobeniusAlgebra::load(
      group_algebra_c2_spec(Field::prime(3)));
  InvarianceReport r2 = invariance_check(C, 1, 1, 3);
  CHECK(r2.ok);
  CHECK(r2.graphs_checked > 1);

  // genus 0, three legs: every decomposition computes tau(abc)
  InvarianceReport r3 = invariance_check(A, 0, 3, 2);
  CHECK(r3.ok);
}

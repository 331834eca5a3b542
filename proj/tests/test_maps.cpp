#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "heg/canonical.hpp"
#include "heg/errors.hpp"
#include "heg/graph_map.hpp"
#include "heg/hom.hpp"

using namespace heg;

namespace {

// Small composable corpus: all classes with <= 2 vertices and <= 2 edges,
// plus the edge graph.
std::vector<Graph> small_corpus() {
  std::vector<Graph> graphs = {make_edge_graph()};
  for (int legs = 0; legs <= 2; ++legs)
    for (const Graph& g : enumerate_graphs(2, 2 - legs, legs))
      graphs.push_back(g);
  return graphs;
}

}  // namespace

TEST_CASE("identity and the edge swap validate") {
  CHECK(is_valid_map(identity_map(make_theta())));
  CHECK(is_valid_map(edge_swap()));
  CHECK(compose(edge_swap(), edge_swap()) == identity_map(make_edge_graph()));
}

TEST_CASE("no map from the edge graph into the 1-corolla") {
  CHECK(enumerate_maps(make_edge_graph(), make_corolla(1)).empty());
}

TEST_CASE("hom-set sizes from exhaustive search") {
  CHECK(enumerate_maps(make_edge_graph(), make_edge_graph()).size() == 2);
  CHECK(enumerate_maps(make_corolla(3), make_corolla(3),
                       MapFilter::Isomorphism)
            .size() == 6);
  CHECK(enumerate_maps(make_corolla(2), make_edge_graph()).size() == 4);
}

TEST_CASE("rho_vertex") {
  GraphMap m = rho_vertex(make_theta(), 0);
  CHECK(m.target == make_corolla(3));
  MapClass c = classify(m);
  CHECK(c.inert);
  CHECK_FALSE(c.active);

  CHECK(rho_vertex(make_loops(1), 0).target == make_corolla(2));
  CHECK(is_isomorphism_map(rho_vertex(make_corolla(4), 0)));
}

TEST_CASE("rho_arc is inert") {
  for (int a = 0; a < make_theta().arc_count(); ++a) {
    GraphMap m = rho_arc(make_theta(), a);
    CHECK(classify(m).inert);
  }
  // two maps corolla(2) -> edge restrict to each leg
  Graph c2 = make_corolla(2);
  auto maps = enumerate_maps(c2, make_edge_graph());
  int restricting_to_leg0 = 0;
  for (const GraphMap& m : maps)
    if (m.arc_map[0] / 2 == 0 || m.arc_map[1] / 2 == 0) ++restricting_to_leg0;
  CHECK(restricting_to_leg0 == 2);
}

TEST_CASE("full collapse of theta is active and quasi-collapse") {
  GraphMap m{make_theta(), make_corolla(0), {0, 0}, {}};
  validate_map(m);
  MapClass c = classify(m);
  CHECK(c.active);
  CHECK(c.quasi_collapse);
  CHECK_FALSE(c.inert);
}

TEST_CASE("identity is inert, active and quasi-collapse") {
  MapClass c = classify(identity_map(make_loops(1)));
  CHECK(c.inert);
  CHECK(c.active);
  CHECK(c.quasi_collapse);
}

TEST_CASE("category laws on the small corpus") {
  auto corpus = small_corpus();
  std::vector<std::vector<std::vector<GraphMap>>> hom(corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    hom[i].resize(corpus.size());
    for (size_t j = 0; j < corpus.size(); ++j)
      hom[i][j] = enumerate_maps(corpus[i], corpus[j]);
  }

  for (size_t i = 0; i < corpus.size(); ++i) {
    // unitality
    for (size_t j = 0; j < corpus.size(); ++j)
      for (const GraphMap& f : hom[i][j]) {
        CHECK(compose(f, identity_map(corpus[i])) == f);
        CHECK(compose(identity_map(corpus[j]), f) == f);
      }
  }

  // closure of composition, inert and active classes
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = 0; j < corpus.size(); ++j)
      for (const GraphMap& f : hom[i][j])
        for (size_t k = 0; k < corpus.size(); ++k)
          for (const GraphMap& g : hom[j][k]) {
            GraphMap gf = compose(g, f);
            CHECK(is_valid_map(gf));
            MapClass cf = classify(f), cg = classify(g), ch = classify(gf);
            if (cf.inert && cg.inert) CHECK(ch.inert);
            if (cf.active && cg.active) CHECK(ch.active);
          }
}

TEST_CASE("factorization recomposes and is unique up to iso") {
  auto corpus = small_corpus();
  for (const Graph& a : corpus)
    for (const Graph& b : corpus)
      for (const GraphMap& f : enumerate_maps(a, b)) {
        auto [in, act] = factorize(f);
        CHECK(classify(in).inert);
        CHECK(classify(act).active);
        CHECK(compose(act, in) == f);

        // middle object independent of construction order
        std::vector<int> reversed(a.edge_count());
        for (int e = 0; e < a.edge_count(); ++e)
          reversed[e] = a.edge_count() - 1 - e;
        auto [in2, act2] = factorize(f, &reversed);
        CHECK(canonical_encoding(in.target) == canonical_encoding(in2.target));
        CHECK(compose(act2, in2) == f);

        // factorizing a factor returns it with an identity
        auto [in3, act3] = factorize(in);
        CHECK(is_isomorphism_map(act3));
        auto [in4, act4] = factorize(act);
        CHECK(is_isomorphism_map(in4));
      }
}

TEST_CASE("factorize of rho_vertex is itself plus identity") {
  GraphMap m = rho_vertex(make_theta(), 0);
  auto [in, act] = factorize(m);
  CHECK(in == m);
  CHECK(act == identity_map(m.target));
}

TEST_CASE("automorphisms form a group") {
  for (const Graph& g :
       {make_edge_graph(), make_corolla(3), make_theta(), make_loops(2)}) {
    auto autos = enumerate_maps(g, g, MapFilter::Isomorphism);
    std::set<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (const GraphMap& m : autos) keys.insert({m.vertex_map, m.arc_map});
    for (const GraphMap& f : autos)
      for (const GraphMap& h : autos) {
        GraphMap c = compose(h, f);
        CHECK(keys.count({c.vertex_map, c.arc_map}) == 1);
      }
  }
}

TEST_CASE("aut(edge) is exactly C2") {
  auto autos =
      enumerate_maps(make_edge_graph(), make_edge_graph(), MapFilter::All);
  REQUIRE(autos.size() == 2);
  CHECK(compose(autos[1], autos[1]) == autos[0]);
}

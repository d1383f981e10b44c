#include <doctest.h>

#include "clusterhall/error.hpp"
#include "clusterhall/mutation.hpp"
#include "oracles.hpp"

using namespace clusterhall;

TEST_CASE("A2 exchange relation") {
  const Seed s = initial_seed(Quiver::build("A2", "2->1"));
  const Seed t = mutate(s, 0);
  LaurentPoly expected(2);
  expected.add_term({-1, 0}, 1);
  expected.add_term({-1, 1}, 1);
  CHECK(t.cluster[0] == expected);
  CHECK(t.cluster[1] == s.cluster[1]);
  CHECK_THROWS_AS(mutate(s, 2), InvalidInput);
}

TEST_CASE("mutation is an involution and flips row and column j") {
  for (const Quiver& q : {Quiver::preset("A4", Orientation::linear), Quiver::build("D4", "1->2,3->2,4->2"),
                          Quiver::preset("E6", Orientation::alternating)}) {
    for (const Seed& s : {initial_seed(q), principal_seed(q)}) {
      Seed cur = s;
      for (int step = 0; step < 6; ++step) {
        const int j = (step * 5 + 1) % s.mutable_count();
        const Seed next = mutate(cur, j);
        const Seed back = mutate(next, j);
        CHECK(back.cluster == cur.cluster);
        CHECK(back.matrix == cur.matrix);
        for (int i = 0; i < cur.matrix.rows; ++i) CHECK(next.matrix(i, j) == -cur.matrix(i, j));
        for (int k = 0; k < cur.matrix.cols; ++k) CHECK(next.matrix(j, k) == -cur.matrix(j, k));
        for (int i = 0; i < cur.mutable_count(); ++i)
          for (int k = 0; k < cur.mutable_count(); ++k) CHECK(next.matrix(i, k) == -next.matrix(k, i));
        cur = next;
      }
    }
  }
}

TEST_CASE("exchange graph sizes") {
  struct Case {
    Quiver q;
    std::size_t clusters, variables;
  };
  for (const Case& c : {Case{Quiver::build("A2", "2->1"), 5, 5}, Case{Quiver::preset("A3", Orientation::linear), 14, 9},
                        Case{Quiver::preset("A4", Orientation::alternating), 42, 14},
                        Case{Quiver::build("D4", "1->2,3->2,4->2"), 50, 16}}) {
    const ExchangeGraph g = exchange_graph(initial_seed(c.q), 100000);
    CHECK(g.finite);
    CHECK(g.nodes.size() == c.clusters);
    CHECK(g.variables.size() == c.variables);
    CHECK(static_cast<long long>(g.nodes.size()) ==
          oracle::cluster_count(c.q.type().label()[0], c.q.num_vertices()));
    CHECK(static_cast<int>(g.variables.size()) == positive_root_count(c.q.type()) + c.q.num_vertices());
    // n-regular graph
    CHECK(g.edges.size() * 2 == g.nodes.size() * c.q.num_vertices());
    for (const LaurentPoly& x : g.variables)
      for (const auto& [e, coef] : x.terms()) CHECK(coef > 0);
  }
  const ExchangeGraph cut = exchange_graph(initial_seed(Quiver::preset("A3", Orientation::linear)), 4);
  CHECK(!cut.finite);
}

TEST_CASE("principal coefficients project to the coefficient-free graph") {
  for (const Quiver& q : {Quiver::build("A2", "2->1"), Quiver::preset("A3", Orientation::alternating)}) {
    const int n = q.num_vertices();
    const ExchangeGraph lifted = exchange_graph(principal_seed(q), 100000);
    const ExchangeGraph plain = exchange_graph(initial_seed(q), 100000);
    CHECK(lifted.nodes.size() == plain.nodes.size());
    std::set<LaurentPoly> projected;
    for (const LaurentPoly& x : lifted.variables) projected.insert(x.specialize_tail(n));
    CHECK(projected == plain.variables);
    // mutation commutes with the projection along any path
    Seed a = principal_seed(q), b = initial_seed(q);
    for (int step = 0; step < 7; ++step) {
      a = mutate(a, step % n);
      b = mutate(b, step % n);
      for (int i = 0; i < n; ++i) CHECK(a.cluster[i].specialize_tail(n) == b.cluster[i]);
    }
  }
}

TEST_CASE("cluster variables are the characters of indecomposables") {
  for (const Quiver& q : {Quiver::build("A2", "2->1"), Quiver::preset("A3", Orientation::linear),
                          Quiver::build("D4", "1->2,3->2,4->2")}) {
    const Engine e(q);
    const VariablesReport r = variables_vs_objects(e);
    CHECK(r.ok());
    CHECK(r.variables_match);
    CHECK(r.tilting_match);
    CHECK(r.variables == r.indecomposables);
    CHECK(r.clusters == r.tilting_objects);
  }
}

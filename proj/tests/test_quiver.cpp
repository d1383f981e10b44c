#include <doctest.h>

#include <random>

#include "clusterhall/error.hpp"
#include "clusterhall/quiver.hpp"
#include "oracles.hpp"

using namespace clusterhall;

namespace {

std::vector<Quiver> all_presets() {
  std::vector<Quiver> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "E6", "E7", "E8"})
    for (Orientation o : {Orientation::linear, Orientation::alternating}) out.push_back(Quiver::preset(t, o));
  return out;
}

}  // namespace

TEST_CASE("build_quiver accepts Dynkin orientations") {
  const Quiver a2 = Quiver::build("A2", {{2, 1}});
  CHECK(a2.num_vertices() == 2);
  CHECK(a2.arrows().size() == 1);
  CHECK(a2.arrows()[0] == Arrow{1, 0});

  const Quiver d4 = Quiver::build("D4", {{1, 2}, {3, 2}, {4, 2}});
  CHECK(d4.num_vertices() == 4);
  CHECK(d4.is_sink(1));
  CHECK(Quiver::build("D4", "1->2,3->2,4->2") == d4);
}

TEST_CASE("build_quiver rejects malformed input") {
  CHECK_THROWS_AS(Quiver::build("A2", {{1, 2}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A3", {{1, 2}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A3", {{1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A2", {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A2", {{1, 3}}), InvalidInput);
  // star with three arms is D4, not A4
  CHECK_THROWS_AS(Quiver::build("A4", {{1, 2}, {3, 2}, {4, 2}}), InvalidInput);
  // D6 graph declared as E6
  CHECK_THROWS_AS(Quiver::build("E6", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}), InvalidInput);
  CHECK_NOTHROW(Quiver::build("E6", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}));
  CHECK_THROWS_AS(Quiver::build("E6", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A9", {{1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("D3", {{1, 2}, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::build("A3", "1->2;2->3"), InvalidInput);
}

TEST_CASE("euler form") {
  const Quiver a2 = Quiver::build("A2", {{2, 1}});
  CHECK(euler_form(a2, {0, 1}, {1, 0}) == -1);
  CHECK(euler_form(a2, {1, 0}, {0, 1}) == 0);
  CHECK(euler_form(a2, {1, 0}, {1, 0}) == 1);
  CHECK_THROWS_AS(euler_form(a2, {1}, {1, 0}), InvalidInput);

  for (const Quiver& q : all_presets())
    for (const IntVector& d : oracle::positive_roots(q)) REQUIRE(euler_form(q, d, d) == 1);
}

TEST_CASE("euler matrix is unitriangular in sink order") {
  for (const Quiver& q : all_presets()) {
    const IntMatrix e = euler_matrix(q);
    const auto order = q.sink_order();
    std::vector<int> pos(q.num_vertices());
    for (int k = 0; k < q.num_vertices(); ++k) pos[order[k]] = k;
    for (int i = 0; i < q.num_vertices(); ++i) {
      CHECK(e(i, i) == 1);
      for (int j = 0; j < q.num_vertices(); ++j)
        if (e(i, j) != 0 && i != j) CHECK(pos[i] > pos[j]);
    }
  }
}

TEST_CASE("coxeter transformation") {
  const Quiver a2 = Quiver::build("A2", {{2, 1}});
  CHECK(coxeter(a2, {0, 1}, 1) == IntVector{1, 0});
  CHECK(coxeter(a2, projective_dim(a2, 0), 1) == scaled(injective_dim(a2, 0), -1));

  std::mt19937 rng(11);
  for (const Quiver& q : all_presets()) {
    const int n = q.num_vertices();
    for (int i = 0; i < n; ++i) {
      CHECK(projective_dim(q, i) == oracle::paths_from(q, i));
      CHECK(injective_dim(q, i) == oracle::paths_into(q, i));
      CHECK(coxeter(q, projective_dim(q, i), 1) == scaled(injective_dim(q, i), -1));
    }
    for (int t = 0; t < 5; ++t) {
      IntVector d(n);
      for (int& x : d) x = static_cast<int>(rng() % 9) - 4;
      CHECK(coxeter(q, coxeter(q, d, 1), -1) == d);
      CHECK(coxeter(q, d, 1) == oracle::coxeter(q, d));
      CHECK(coxeter(q, d, 3) == coxeter(q, coxeter(q, coxeter(q, d, 1), 1), 1));
    }
  }
}

TEST_CASE("positive roots") {
  const Quiver a2 = Quiver::build("A2", {{2, 1}});
  const auto r2 = positive_roots(a2);
  CHECK(std::set<IntVector>(r2.begin(), r2.end()) == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(positive_roots(Quiver::preset("A1", Orientation::linear)) == std::vector<IntVector>{{1}});
  CHECK(positive_roots(Quiver::build("D4", "1->2,3->2,4->2")).size() == 12);

  for (const Quiver& q : all_presets()) {
    const auto roots = positive_roots(q);
    const auto expected = oracle::positive_roots(q);
    CHECK(std::set<IntVector>(roots.begin(), roots.end()) == expected);
    CHECK(roots.size() == expected.size());
    CHECK(static_cast<int>(roots.size()) == positive_root_count(q.type()));
  }
}

TEST_CASE("b matrix") {
  const Quiver a2 = Quiver::build("A2", {{2, 1}});
  const IntMatrix b = b_matrix(a2);
  CHECK(b(0, 0) == 0);
  CHECK(b(0, 1) == -1);
  CHECK(b(1, 0) == 1);
  CHECK(b(1, 1) == 0);

  std::mt19937 rng(5);
  for (const Quiver& q : all_presets()) {
    const int n = q.num_vertices();
    const IntMatrix bq = b_matrix(q);
    IntMatrix neg(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) neg(i, j) = -bq(i, j);
    CHECK(bq.transpose() == neg);
    for (int t = 0; t < 5; ++t) {
      IntVector e(n);
      for (int& x : e) x = static_cast<int>(rng() % 7) - 3;
      IntVector expected(n, 0);
      for (int i = 0; i < n; ++i) {
        const IntVector a = unit_vector(n, i);
        expected[i] = static_cast<int>(euler_form(q, e, a) - euler_form(q, a, e));
      }
      CHECK(bq.apply(e) == expected);
    }
  }
}

TEST_CASE("presets") {
  const Quiver d4 = Quiver::preset("D4", Orientation::alternating);
  CHECK(d4 == Quiver::build("D4", "1->2,3->2,4->2"));
  const Quiver a3 = Quiver::preset("A3", Orientation::linear);
  CHECK(a3 == Quiver::build("A3", "1->2,2->3"));
  for (const Quiver& q : all_presets()) {
    const auto order = q.sink_order();
    CHECK(order.size() == static_cast<std::size_t>(q.num_vertices()));
    CHECK(q.opposite().opposite() == q);
  }
}

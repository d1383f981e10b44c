#include <doctest.h>

#include <random>

#include "clusterhall/context.hpp"
#include "clusterhall/error.hpp"
#include "clusterhall/grassmannian.hpp"
#include "oracles.hpp"

using namespace clusterhall;

TEST_CASE("submodule counts agree with brute force") {
  std::mt19937 rng(21);
  for (const Quiver& q : {Quiver::build("A2", "2->1"), Quiver::build("A3", "1->2,3->2"),
                          Quiver::build("A3", "1->2,2->3"), Quiver::build("D4", "1->2,3->2,4->2")}) {
    const Context ctx(q);
    for (int t = 0; t < 12; ++t) {
      IsoType m = IsoType::zero(ctx.num_roots());
      for (int s = 0; s < 2; ++s) m.mult[rng() % ctx.num_roots()] += 1;
      for (std::uint32_t p : {2u, 3u}) {
        const Rep rep = ctx.realize(m, p);
        for (const IntVector& e : sub_dimension_vectors(rep.dims)) {
          const BigInt fast = count_submodules(rep, e, 1'000'000);
          CHECK(fast == oracle::brute_submodules(rep, e));
          BigInt listed = 0;
          for_each_submodule(rep, e, 1'000'000, [&](const std::vector<FMatrix>& basis) {
            ++listed;
            CHECK(subrep(rep, basis).dims == e);
          });
          CHECK(listed == fast);
        }
      }
    }
  }
}

TEST_CASE("semisimple modules give Gaussian binomials") {
  const Context ctx(Quiver::build("A2", "2->1"));
  const int s1 = ctx.root_index({1, 0}), s2 = ctx.root_index({0, 1});
  IsoType m = IsoType::zero(3);
  m.mult[s1] = 3;
  m.mult[s2] = 2;
  for (std::uint32_t p : {2u, 3u, 5u})
    CHECK(count_submodules(ctx.realize(m, p), {2, 1}, 1'000'000) ==
          gaussian_binomial(3, 2, p) * gaussian_binomial(2, 1, p));
  const QPoly poly = grassmann_poly(ctx, m, {1, 1});
  CHECK(poly == QPoly({1, 1, 1}) * QPoly({1, 1}));
  CHECK(euler_char(poly) == 6);
}

TEST_CASE("quiver Grassmannians of A2 indecomposables") {
  const Context ctx(Quiver::build("A2", "2->1"));
  const IsoType p2 = IsoType::single(3, ctx.projective(1));
  CHECK(grassmann_poly(ctx, p2, {1, 0}) == QPoly::constant(1));
  CHECK(grassmann_poly(ctx, p2, {0, 1}).is_zero());
  CHECK(grassmann_poly(ctx, p2, {1, 1}) == QPoly::constant(1));
  CHECK(grassmann_poly(ctx, p2, {0, 0}) == QPoly::constant(1));
}

TEST_CASE("euler characteristic checks") {
  CHECK(euler_char(QPoly({1, 1})) == 2);
  CHECK(euler_char(QPoly()) == 0);
  CHECK_THROWS_AS(euler_char(QPoly({-2, 1})), InvariantViolation);
  CHECK_THROWS_AS(euler_char(QPoly({-1, 1})), InvariantViolation);
}

TEST_CASE("degree bound and sub dimension vectors") {
  CHECK(grassmann_degree_bound({2, 3}, {1, 1}) == 1 + 2);
  const auto subs = sub_dimension_vectors({1, 2});
  CHECK(subs.size() == 6);
  CHECK(subs.front() == IntVector{0, 0});
  CHECK(subs.back() == IntVector{1, 2});
}

TEST_CASE("budget is enforced") {
  const Context ctx(Quiver::build("A2", "2->1"));
  IsoType m = IsoType::zero(3);
  m.mult[ctx.root_index({1, 0})] = 8;
  const Rep rep = ctx.realize(m, 5);
  CHECK_THROWS_AS(for_each_submodule(rep, {4, 0}, 1000, [](const std::vector<FMatrix>&) {}), BudgetExceeded);
  CHECK_THROWS_AS(subspaces(8, 4, 5, 1000), BudgetExceeded);
  // a leaf of the counting tree is summed in closed form, without enumeration
  CHECK(count_submodules(rep, {4, 0}, 1000) == gaussian_binomial(8, 4, 5));
}

TEST_CASE("D4 Grassmannians of the middle indecomposable") {
  const Context ctx(Quiver::build("D4", "1->2,3->2,4->2"));
  const IsoType u = IsoType::single(ctx.num_roots(), ctx.root_index({1, 2, 1, 1}));
  // submodules of dimension alpha_2 form a projective line
  CHECK(grassmann_poly(ctx, u, {0, 1, 0, 0}) == QPoly({1, 1}));
  CHECK(euler_char(ctx, u, {0, 1, 0, 0}) == 2);
}

#include <doctest.h>

#include "clusterhall/error.hpp"
#include "clusterhall/grassmannian.hpp"
#include "clusterhall/hall.hpp"
#include "clusterhall/objspec.hpp"

using namespace clusterhall;

namespace {

IsoType iso(const Category& cat, const std::string& s) { return parse_object(cat, s).h0(); }

}  // namespace

TEST_CASE("Hall polynomials in A2") {
  const Engine e(Quiver::build("A2", "2->1"));
  const Context& ctx = e.context();
  const Category& cat = e.category();
  CHECK(hall_polynomial(ctx, iso(cat, "S2"), iso(cat, "S1"), iso(cat, "P2")) == QPoly::constant(1));
  CHECK(hall_polynomial(ctx, iso(cat, "S1"), iso(cat, "S2"), iso(cat, "P2")).is_zero());
  CHECK(hall_polynomial(ctx, iso(cat, "S2"), iso(cat, "S1"), iso(cat, "S1+S2")) == QPoly::constant(1));
  CHECK(hall_polynomial(ctx, iso(cat, "S1"), iso(cat, "S1"), iso(cat, "2*S1")) == QPoly({1, 1}));
  CHECK_THROWS_AS(hall_polynomial(ctx, iso(cat, "S1"), iso(cat, "S1"), iso(cat, "P2")), InvalidInput);
}

TEST_CASE("b products equal Euler characteristics of Grassmannians") {
  for (const Quiver& q : {Quiver::build("A2", "2->1"), Quiver::preset("A3", Orientation::alternating)}) {
    const Engine e(q);
    const Context& ctx = e.context();
    const int n = ctx.n();
    for (const IntVector& total : sub_dimension_vectors(IntVector(n, 2))) {
      int size = 0;
      for (int v : total) size += v;
      if (size > 3) continue;
      for (const IntVector& sub : sub_dimension_vectors(total)) {
        const IntVector quo = clusterhall::sub(total, sub);
        const auto prod = b_product(ctx, quo, sub);
        for (const IsoType& x : isotypes_with_dim(ctx, total)) {
          auto it = prod.find(x);
          const BigInt got = it == prod.end() ? BigInt(0) : it->second;
          CHECK(got == euler_char(ctx, x, sub));
        }
      }
    }
  }
  const Engine a2(Quiver::build("A2", "2->1"));
  const Category& cat = a2.category();
  const auto p = b_product(a2.context(), {0, 1}, {1, 0});
  CHECK(p.at(iso(cat, "P2")) == 1);
  CHECK(p.at(iso(cat, "S1+S2")) == 1);
  const auto r = b_product(a2.context(), {1, 0}, {0, 1});
  CHECK(!r.count(iso(cat, "P2")));
  CHECK(r.at(iso(cat, "S1+S2")) == 1);
  const auto unit = b_product(a2.context(), {0, 0}, {1, 1});
  CHECK(unit.at(iso(cat, "P2")) == 1);
  CHECK(unit.at(iso(cat, "S1+S2")) == 1);
}

TEST_CASE("multiplication identity on worked pairs") {
  const Engine a2(Quiver::build("A2", "2->1"));
  const Category& c2 = a2.category();
  const Characters& x2 = a2.characters();
  const auto r = verify_multiplication(a2, parse_object(c2, "2*S2"), parse_object(c2, "2*S1"));
  CHECK(r.ok());
  CHECK(x2.x_of(parse_object(c2, "2*S2")) * x2.x_of(parse_object(c2, "2*S1")) ==
        x2.x_of(parse_object(c2, "2*P2")) + x2.x_of(parse_object(c2, "P2")) * BigInt(2) + LaurentPoly::constant(2, 1));
  const auto orth = verify_multiplication(a2, parse_object(c2, "S1"), parse_object(c2, "P2"));
  CHECK(orth.ext == 0);
  CHECK(orth.ok());

  const Engine d4(Quiver::build("D4", "1->2,3->2,4->2"));
  const Category& c4 = d4.category();
  const Characters& x4 = d4.characters();
  CHECK(verify_multiplication(d4, parse_object(c4, "S2"), parse_object(c4, "I2")).ok());
  CHECK(x4.x_of(parse_object(c4, "S2")) * x4.x_of(parse_object(c4, "I2")) ==
        x4.x_of(parse_object(c4, "root:[1,2,1,1]")) + LaurentPoly::constant(4, 3) + x4.x_of(parse_object(c4, "SP2")));
}

TEST_CASE("one-dimensional extensions give two middle terms") {
  const Engine e(Quiver::preset("A3", Orientation::alternating));
  const Category& cat = e.category();
  int seen = 0;
  for (int a = 0; a < cat.num_indecomposables(); ++a)
    for (int b = 0; b < cat.num_indecomposables(); ++b) {
      if (cat.ext1(a, b) != 1) continue;
      ++seen;
      const TriangleCount& f = cat.middle_terms(a, b);
      const TriangleCount& g = cat.middle_terms(b, a);
      REQUIRE(f.classes.size() == 1);
      REQUIRE(g.classes.size() == 1);
      const auto& ch = e.characters();
      CHECK(ch.x_of(cat.indecomposable(a)) * ch.x_of(cat.indecomposable(b)) ==
            ch.x_of(f.classes[0].middle) + ch.x_of(g.classes[0].middle));
    }
  CHECK(seen > 0);
}

TEST_CASE("elementary degenerations") {
  const Engine e(Quiver::build("A2", "2->1"));
  const Category& cat = e.category();
  const auto steps = elementary_degenerations(cat, parse_object(cat, "S1+S2"));
  REQUIRE(steps.size() == 2);
  std::set<CCObject> targets;
  for (const auto& s : steps) {
    targets.insert(s.to);
    CHECK(s.c == 1);
    CHECK(s.z_first == 1);
    CHECK(s.z_second == 1);
  }
  CHECK(targets == std::set<CCObject>{parse_object(cat, "P2"), parse_object(cat, "0")});
  for (const auto& s : steps) {
    if (s.to == parse_object(cat, "P2")) {
      CHECK(cat.label(s.first) == "root:[1,0]");
      CHECK(cat.label(s.second) == "root:[0,1]");
    }
  }
  CHECK(elementary_degenerations(cat, parse_object(cat, "P2")).empty());
  CHECK(elementary_degenerations(cat, parse_object(cat, "2*S1")).empty());
}

TEST_CASE("r coefficients") {
  const Engine e(Quiver::build("A2", "2->1"));
  const Category& cat = e.category();
  const CCObject x = parse_object(cat, "S1+S2"), p2 = parse_object(cat, "P2");
  CHECK(r_coefficient(cat, x, x, Convention::module_ext) == 1);
  CHECK(r_coefficient(cat, p2, p2, Convention::cluster_ext) == 1);
  CHECK(r_coefficient(cat, x, p2, Convention::cluster_ext) == Rational(1, 2));
  CHECK(r_coefficient(cat, x, p2, Convention::module_ext) == 1);
  CHECK(r_coefficient(cat, parse_object(cat, "2*S1+2*S2"), p2, Convention::module_ext) == 2);
  ChainSolver solver(cat, Convention::module_ext);
  CHECK(solver.chains(parse_object(cat, "2*S1+2*S2"), p2, 100).size() == 2);
  CHECK_THROWS_AS(parse_convention("other"), InvalidInput);
}

TEST_CASE("restricting to exceptional targets leaves their coefficients unchanged") {
  const Engine e(Quiver::preset("A3", Orientation::alternating));
  const Category& cat = e.category();
  for (Convention conv : {Convention::module_ext, Convention::cluster_ext}) {
    ChainSolver full(cat, conv), restricted(cat, conv, true);
    for (int a = 0; a < cat.num_indecomposables(); ++a)
      for (int b = 0; b < cat.num_indecomposables(); ++b) {
        const CCObject x = cat.indecomposable(a).times(2) + cat.indecomposable(b);
        std::map<CCObject, Rational> expected;
        for (const auto& [k, v] : full.reach(x))
          if (cat.is_exceptional(k)) expected[k] = v;
        CHECK(restricted.reach(x) == expected);
      }
  }
}

TEST_CASE("basis expansion") {
  const Quiver q = Quiver::build("A2", "2->1");
  const Engine e(q);
  const Category& cat = e.category();
  const Characters& x = e.characters();
  const EpsilonForm eps = *find_epsilon(q);
  const CCObject p2 = parse_object(cat, "P2");
  const Expansion k = expand_in_basis(e, x.x_of(p2), eps);
  CHECK(k.complete);
  CHECK(k.coeffs == std::map<CCObject, BigInt>{{p2, 1}});
  const Expansion a = expand_in_basis(e, x.x_of(parse_object(cat, "S1")) * x.x_of(parse_object(cat, "S2")), eps);
  CHECK(a.coeffs == std::map<CCObject, BigInt>{{p2, 1}, {parse_object(cat, "0"), 1}});
  const Expansion b = expand_in_basis(e, x.x_of(parse_object(cat, "2*S1")) * x.x_of(parse_object(cat, "2*S2")), eps);
  CHECK(b.coeffs ==
        std::map<CCObject, BigInt>{{parse_object(cat, "2*P2"), 1}, {p2, 2}, {parse_object(cat, "0"), 1}});
  CHECK(contract(e, b) == x.x_of(parse_object(cat, "2*S1+2*S2")));
  // a Laurent polynomial outside the algebra never reaches zero
  LaurentPoly odd(2);
  odd.add_term({-3, 5}, 1);
  CHECK(!expand_in_basis(e, odd, eps, 50).complete);
}

TEST_CASE("exceptional Hall products in A2") {
  const Quiver q = Quiver::build("A2", "2->1");
  const Engine e(q);
  const Category& cat = e.category();
  const EpsilonForm eps = *find_epsilon(q);
  for (int a = 0; a < cat.num_indecomposables(); ++a)
    for (int b = 0; b < cat.num_indecomposables(); ++b) {
      const auto r = hall_multiply(e, cat.indecomposable(a), cat.indecomposable(b), Convention::module_ext, eps);
      CHECK(r.matches);
    }
  const auto c = hall_multiply(e, parse_object(cat, "S1"), parse_object(cat, "S2"), Convention::cluster_ext, eps);
  CHECK(!c.matches);
  for (const auto& entry : c.entries) {
    CHECK(entry.r == Rational(1, 2));
    CHECK(!entry.chains.empty());
  }
}

TEST_CASE("nonnegativity sweep") {
  const Engine e(Quiver::build("A2", "2->1"));
  const ConjectureReport r = conjecture_64_report(e, 2);
  CHECK(r.objects == 242);
  REQUIRE(r.sides.size() == 2);
  for (const auto& s : r.sides) {
    CHECK(s.pairs > 0);
    CHECK(s.negative == 0);
    CHECK(*s.min_r >= 0);
  }
}

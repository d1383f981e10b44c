#include <doctest.h>

#include "clusterhall/error.hpp"
#include "clusterhall/objspec.hpp"
#include "clusterhall/serialize.hpp"

using namespace clusterhall;

TEST_CASE("object mini-language") {
  const Context ctx(Quiver::build("D4", "1->2,3->2,4->2"));
  const Category cat(ctx);
  const CCObject x = parse_object(cat, "2*S1 + SP2+root:[1,2,1,1]");
  CHECK(x.module[ctx.root_index({1, 0, 0, 0})] == 2);
  CHECK(x.module[ctx.root_index({1, 2, 1, 1})] == 1);
  CHECK(x.shifted[1] == 1);
  CHECK(parse_object(cat, "I2") == parse_object(cat, "root:[1,1,1,1]"));
  CHECK(parse_object(cat, "P1") == parse_object(cat, "root:[1,1,0,0]"));
  CHECK(parse_object(cat, "0").is_zero());
  CHECK(parse_object_list(cat, "S1;P2").size() == 2);
  for (const char* bad : {"", "S5", "Q1", "root:[1,1]", "root:[2,2,2,2]", "2*", "S1++S2", "SP0", "root:[1,x,0,0]"})
    CHECK_THROWS_AS(parse_object(cat, bad), InvalidInput);
}

TEST_CASE("JSON formats") {
  const Context ctx(Quiver::build("A2", "2->1"));
  const Category cat(ctx);
  const CCObject x = parse_object(cat, "S1+S2+SP2");
  const json j = to_json(cat, x);
  CHECK(j["module"]["[1,0]"] == 1);
  CHECK(j["sp"]["2"] == 1);
  CHECK(to_json(ctx, x.h0()).dump() == R"({"module":{"[1,0]":1,"[0,1]":1},"shifted_projectives":{}})");
  LaurentPoly p(2);
  p.add_term({-1, 1}, 1);
  p.add_term({-1, 0}, 1);
  CHECK(to_json(p).dump() == R"([{"exp":[-1,0],"coef":1},{"exp":[-1,1],"coef":1}])");
  CHECK(to_json(BigInt(1) << 80).is_string());
  CHECK(to_json(Rational(1, 2)) == "1/2");
  CHECK(to_json(ctx.quiver()).dump() == R"({"type":"A2","arrows":[[2,1]]})");
  FanReport f;
  f.samples = 200;
  f.unique_cone_hits = 200;
  CHECK(to_json(f)["unique_cone_hits"] == 200);
}

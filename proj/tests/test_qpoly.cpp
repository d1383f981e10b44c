#include <doctest.h>

#include "clusterhall/qpoly.hpp"

using namespace clusterhall;

TEST_CASE("qpoly arithmetic and printing") {
  const QPoly a({1, 2, 1});
  CHECK(a.to_string() == "q^2+2q+1");
  CHECK(QPoly({0, -1, 0, 1}).to_string() == "q^3-q");
  CHECK(QPoly({-2, 1}).to_string() == "q-2");
  CHECK(QPoly().to_string() == "0");
  CHECK(QPoly({5, 0, 0}).degree() == 0);
  CHECK((a * QPoly({-1, 1})).eval(3) == 32);
  CHECK((a - a).is_zero());
  CHECK(a.eval(1) == 4);
}

TEST_CASE("projective space count") {
  CHECK(projective_space_count(4).to_string() == "q^3+q^2+q+1");
  CHECK(projective_space_count(1) == QPoly::constant(1));
  CHECK(projective_space_count(0).is_zero());
}

TEST_CASE("interpolation") {
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (int q : {2, 3, 5, 7}) pts.emplace_back(q, q * q * q - q);
  CHECK(interpolate(pts) == QPoly({0, -1, 0, 1}));
  CHECK_THROWS_AS(interpolate({{0, 0}, {2, 1}}), InvariantViolation);
}

TEST_CASE("prime schedule") {
  CHECK(prime_schedule({7, 2}, 4) == std::vector<std::uint32_t>{7, 2, 3, 5});
  CHECK(prime_schedule({2, 3, 5}, 2) == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("interpolate_counts fits, verifies and drops zeros") {
  const std::function<std::map<int, BigInt>(std::uint32_t)> f = [](std::uint32_t q) {
    return std::map<int, BigInt>{{0, BigInt(q) * q + 1}, {1, 0}};
  };
  const auto res = interpolate_counts<int>(2, {2, 3, 5}, f);
  CHECK(res.size() == 1);
  CHECK(res.at(0) == QPoly({1, 0, 1}));
  CHECK_THROWS_AS(interpolate_counts<int>(1, {2, 3, 5}, f), InvariantViolation);
  const std::function<std::map<int, BigInt>(std::uint32_t)> cubic = [](std::uint32_t q) {
    return std::map<int, BigInt>{{0, BigInt(q) * q * q}};
  };
  CHECK_THROWS_AS(interpolate_counts<int>(2, {2, 3, 5}, cubic), InvariantViolation);
}

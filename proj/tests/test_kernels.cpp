#include <doctest.h>

#include <random>

#include "clusterhall/ffalg.hpp"
#include "clusterhall/kernels.hpp"

using namespace clusterhall;
namespace k = clusterhall::kernels;

TEST_CASE("small reduction is exact below 4096") {
  for (std::uint32_t p : supported_primes()) {
    const std::uint32_t magic = k::reduce_magic(p);
    for (std::uint32_t x = 0; x < 4096; ++x) REQUIRE(k::reduce_small(x, p, magic) == x % p);
  }
}

TEST_CASE("every available ISA matches the scalar kernels") {
  std::mt19937 rng(3);
  const k::Table& ref = k::scalar::table();
  for (k::Isa isa : k::available()) {
    const k::Table& t = k::table(isa);
    CAPTURE(k::name(isa));
    for (std::uint32_t p : supported_primes())
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u, 70000u}) {
        std::vector<std::uint32_t> a(n), b(n);
        for (auto& x : a) x = rng() % p;
        for (auto& x : b) x = rng() % p;
        const std::uint32_t c = rng() % p;
        auto a1 = a, a2 = a;
        ref.axpy(a1.data(), b.data(), n, c, p);
        t.axpy(a2.data(), b.data(), n, c, p);
        REQUIRE(a1 == a2);
        ref.scale(a1.data(), n, c, p);
        t.scale(a2.data(), n, c, p);
        REQUIRE(a1 == a2);
        REQUIRE(ref.dot(a.data(), b.data(), n, p) == t.dot(a.data(), b.data(), n, p));
      }
  }
}

TEST_CASE("linear algebra is identical under every ISA") {
  std::mt19937 rng(4);
  std::vector<FMatrix> ms;
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t p = supported_primes()[rng() % supported_primes().size()];
    FMatrix m(1 + rng() % 12, 1 + rng() % 12, p);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.set(i, j, rng() % 3 ? 0 : rng() % p);
    ms.push_back(m);
  }
  const k::Isa before = k::active().isa;
  std::vector<Echelon> expected;
  k::select(k::Isa::scalar);
  for (const FMatrix& m : ms) expected.push_back(rref(m));
  for (k::Isa isa : k::available()) {
    k::select(isa);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const Echelon e = rref(ms[i]);
      CHECK(e.reduced == expected[i].reduced);
      CHECK(e.pivots == expected[i].pivots);
    }
  }
  k::select(before);
}

TEST_CASE("scalar is always available") {
  const auto isas = k::available();
  CHECK(std::find(isas.begin(), isas.end(), k::Isa::scalar) != isas.end());
  CHECK(k::name(k::Isa::scalar) == "scalar");
}

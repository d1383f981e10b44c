#pragma once

// Row kernels for arithmetic mod small primes.
//
// All entries are uint32 residues already reduced mod p, with p <= 64. Every
// ISA variant must produce bit-identical results to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace clusterhall::kernels {

enum class Isa { scalar, avx2, neon };

struct Table {
  Isa isa;
  // dst[k] = (dst[k] + c * src[k]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
               std::uint32_t p);
  // dst[k] = (c * dst[k]) mod p
  void (*scale)(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
  // sum_k a[k] * b[k] mod p
  std::uint32_t (*dot)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                       std::uint32_t p);
};

inline constexpr std::uint32_t kMaxPrime = 64;
inline constexpr unsigned kReduceShift = 20;

// ceil(2^20 / p); x mod p == x - p * ((x * magic) >> 20) for x < 4096.
constexpr std::uint32_t reduce_magic(std::uint32_t p) {
  return ((1u << kReduceShift) + p - 1) / p;
}

constexpr std::uint32_t reduce_small(std::uint32_t x, std::uint32_t p, std::uint32_t magic) {
  return x - p * ((x * magic) >> kReduceShift);
}

const Table& active();
const Table& table(Isa isa);  // throws InvalidInput if not available on this CPU
std::vector<Isa> available();
void select(Isa isa);
std::string_view name(Isa isa);

namespace scalar {
const Table& table();
}
namespace avx2 {
bool compiled();
const Table& table();
}
namespace neon {
bool compiled();
const Table& table();
}

}  // namespace clusterhall::kernels

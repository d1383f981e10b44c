#include "clusterhall/kernels.hpp"

namespace clusterhall::kernels::scalar {
namespace {

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
          std::uint32_t p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = (dst[k] + c * src[k]) % p;
}

void scale(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = (c * dst[k]) % p;
}

std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a[k]) * b[k];
  return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

const Table& table() {
  static const Table t{Isa::scalar, &axpy, &scale, &dot};
  return t;
}

}  // namespace clusterhall::kernels::scalar

#include <atomic>
#include <cstdlib>
#include <string>

#include "clusterhall/error.hpp"
#include "clusterhall/kernels.hpp"

namespace clusterhall::kernels {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
      return neon::compiled();
  }
  return false;
}

const Table* best() {
  if (const char* env = std::getenv("CLUSTERHALL_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &scalar::table();
    if (want == "avx2" && cpu_has(Isa::avx2)) return &avx2::table();
    if (want == "neon" && cpu_has(Isa::neon)) return &neon::table();
  }
  if (cpu_has(Isa::avx2)) return &avx2::table();
  if (cpu_has(Isa::neon)) return &neon::table();
  return &scalar::table();
}

std::atomic<const Table*>& slot() {
  static std::atomic<const Table*> s{best()};
  return s;
}

}  // namespace

const Table& active() { return *slot().load(std::memory_order_acquire); }

const Table& table(Isa isa) {
  if (!cpu_has(isa)) throw InvalidInput("kernel ISA not available: " + std::string(name(isa)));
  switch (isa) {
    case Isa::scalar:
      return scalar::table();
    case Isa::avx2:
      return avx2::table();
    case Isa::neon:
      return neon::table();
  }
  return scalar::table();
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

void select(Isa isa) { slot().store(&table(isa), std::memory_order_release); }

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace clusterhall::kernels

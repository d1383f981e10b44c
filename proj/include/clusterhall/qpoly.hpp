#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterhall/error.hpp"
#include "clusterhall/numeric.hpp"

namespace clusterhall {

// Integer polynomial in q, coefficients low to high, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c) { return QPoly({c}); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt eval(const BigInt& q) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  std::string to_string() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  std::vector<BigInt> c_;
};

// (q^d - 1)/(q - 1)
QPoly projective_space_count(int d);

// Exact Lagrange interpolation; throws InvariantViolation if a coefficient is
// not an integer.
QPoly interpolate(const std::vector<std::pair<BigInt, BigInt>>& points);

// The configured primes in order, followed by the remaining supported primes
// in ascending order, truncated to `needed`.
std::vector<std::uint32_t> prime_schedule(const std::vector<std::uint32_t>& configured,
                                          std::size_t needed);

// Interpolates per-key point counts through degree_bound + 1 primes, then
// re-counts at one further prime and requires every polynomial to match.
template <class Key>
std::map<Key, QPoly> interpolate_counts(int degree_bound, const std::vector<std::uint32_t>& configured,
                                        const std::function<std::map<Key, BigInt>(std::uint32_t)>& count) {
  const std::size_t fit = static_cast<std::size_t>(std::max(degree_bound, 0)) + 1;
  const std::vector<std::uint32_t> primes = prime_schedule(configured, fit + 1);
  std::vector<std::map<Key, BigInt>> samples;
  std::map<Key, QPoly> result;
  for (std::size_t k = 0; k < fit; ++k) {
    samples.push_back(count(primes[k]));
    for (const auto& [key, v] : samples.back()) result.emplace(key, QPoly());
  }
  for (auto& [key, poly] : result) {
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (std::size_t k = 0; k < fit; ++k) {
      auto it = samples[k].find(key);
      pts.emplace_back(BigInt(primes[k]), it == samples[k].end() ? BigInt(0) : it->second);
    }
    poly = interpolate(pts);
    if (poly.degree() > degree_bound)
      throw InvariantViolation("interpolated count exceeds its degree bound");
  }
  const std::uint32_t held = primes[fit];
  const auto check = count(held);
  for (const auto& [key, v] : check)
    if (!result.count(key) || result.at(key).eval(held) != v)
      throw InvariantViolation("held-out count at p=" + std::to_string(held) +
                               " disagrees with the interpolated polynomial");
  for (const auto& [key, poly] : result) {
    auto it = check.find(key);
    if (poly.eval(held) != (it == check.end() ? BigInt(0) : it->second))
      throw InvariantViolation("held-out count at p=" + std::to_string(held) +
                               " disagrees with the interpolated polynomial");
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

}  // namespace clusterhall

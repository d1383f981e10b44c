#include "clusterhall/qpoly.hpp"

#include <algorithm>

#include "clusterhall/kernels.hpp"

namespace clusterhall {

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? "-" : "+";
    }
    if (k == 0 || mag != 1) s += mag.str();
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

QPoly projective_space_count(int d) {
  std::vector<BigInt> c(std::max(d, 0), BigInt(1));
  return QPoly(std::move(c));
}

QPoly interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
  const std::size_t n = points.size();
  std::vector<Rational> total(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (q - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(points[j].first);
      }
      basis = std::move(next);
      denom *= Rational(points[i].first - points[j].first);
    }
    const Rational scale = Rational(points[i].second) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) total[k] += basis[k] * scale;
  }
  std::vector<BigInt> coeffs;
  for (const Rational& r : total) {
    if (boost::multiprecision::denominator(r) != 1)
      throw InvariantViolation("interpolated count polynomial has non-integer coefficient " +
                               clusterhall::to_string(r));
    coeffs.push_back(boost::multiprecision::numerator(r));
  }
  return QPoly(std::move(coeffs));
}

std::vector<std::uint32_t> prime_schedule(const std::vector<std::uint32_t>& configured,
                                          std::size_t needed) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : configured) {
    if (out.size() == needed) return out;
    if (p > kernels::kMaxPrime || !is_prime(p))
      throw InvalidInput("configured prime " + std::to_string(p) + " is not a prime <= 64");
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  for (std::uint32_t p : supported_primes()) {
    if (out.size() == needed) return out;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.size() < needed)
    throw BudgetExceeded("interpolation needs " + std::to_string(needed) +
                         " primes but only primes <= 64 are supported");
  return out;
}

}  // namespace clusterhall

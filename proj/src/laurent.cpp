#include "clusterhall/laurent.hpp"

#include <algorithm>

#include "clusterhall/error.hpp"

namespace clusterhall {

LaurentPoly LaurentPoly::constant(int nvars, const BigInt& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent length mismatch");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) { return monomial(nvars, unit_vector(nvars, i)); }

BigInt LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InvalidInput("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("Laurent polynomials in different numbers of variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const BigInt& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  check(d);
  if (d.is_zero()) throw InvalidInput("division by the zero Laurent polynomial");
  LaurentPoly quotient(nvars_);
  if (is_zero()) return quotient;
  // Any exact quotient has support inside this box.
  Exponent lo(nvars_), hi(nvars_), dlo(nvars_), dhi(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    int a = INT32_MAX, b = INT32_MIN, c = INT32_MAX, e = INT32_MIN;
    for (const auto& [x, v] : terms_) a = std::min(a, x[i]), b = std::max(b, x[i]);
    for (const auto& [x, v] : d.terms_) c = std::min(c, x[i]), e = std::max(e, x[i]);
    lo[i] = a - e;
    hi[i] = b - c;
  }
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  LaurentPoly rest = *this;
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.rbegin();
    if (rc % lead_c != 0) return std::nullopt;
    Exponent qe(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
    }
    const LaurentPoly t = monomial(nvars_, qe, rc / lead_c);
    quotient += t;
    rest -= t * d;
  }
  return quotient;
}

LaurentPoly LaurentPoly::specialize_tail(int keep) const {
  LaurentPoly r(keep);
  for (const auto& [e, c] : terms_) r.add_term(Exponent(e.begin(), e.begin() + keep), c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const BigInt mag = abs(c);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (mono.empty())
      s += mag.str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.str() + "*" + mono;
  }
  return s;
}

IntVector denominator(const LaurentPoly& p) {
  IntVector d(p.nvars(), 0);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < p.nvars(); ++i) d[i] = std::max(d[i], -e[i]);
  return d;
}

std::vector<IntVector> support(const LaurentPoly& p) {
  std::vector<IntVector> s;
  for (const auto& [e, c] : p.terms()) s.push_back(e);
  return s;
}

}  // namespace clusterhall

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterhall/numeric.hpp"
#include "clusterhall/quiver.hpp"

namespace clusterhall {

// Integer Laurent polynomial in nvars variables; exponent vectors in lex
// order, no zero coefficients stored.
class LaurentPoly {
 public:
  using Exponent = IntVector;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const BigInt& c);
  static LaurentPoly monomial(int nvars, const Exponent& e, const BigInt& c = 1);
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  BigInt coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const BigInt& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const BigInt& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly pow(unsigned k) const;

  // Exact quotient, or empty if d does not divide this polynomial.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  // Sets variables keep, keep+1, ... to 1.
  LaurentPoly specialize_tail(int keep) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

 private:
  void check(const LaurentPoly& o) const;
  int nvars_ = 0;
  Terms terms_;
};

// Componentwise max(0, -exponent) over the support.
IntVector denominator(const LaurentPoly& p);
std::vector<IntVector> support(const LaurentPoly& p);

}  // namespace clusterhall
